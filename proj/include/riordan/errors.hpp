#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

// Root of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Series arithmetic.
class division_by_zero_series : public error { public: using error::error; };
class valuation_error : public error { public: using error::error; };
class composition_error : public error { public: using error::error; };
class reversion_error : public error { public: using error::error; };
class sqrt_error : public error { public: using error::error; };
class order_error : public error { public: using error::error; };

// Riordan pairs.
class invariant_error : public error { public: using error::error; };
class propriety_error : public error { public: using error::error; };
class degenerate_z : public error { public: using error::error; };

// Constructions.
class precondition_error : public error { public: using error::error; };
class order_two_error : public error { public: using error::error; };

// Expression language.
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t offset)
        : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class unknown_name_error : public error {
public:
    unknown_name_error(const std::string& name, std::size_t offset)
        : error("unknown series name '" + name + "' at offset " + std::to_string(offset)),
          name_(name), offset_(offset) {}

    const std::string& name() const noexcept { return name_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string name_;
    std::size_t offset_;
};

} // namespace riordan
