#ifndef SICVI_INDEX_RESULT_HPP
#define SICVI_INDEX_RESULT_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

/**
 * @file IndexResult.hpp
 * @brief Value-or-undefined outcome of a validity index.
 */

namespace sicvi {

/**
 * @brief Outcome of evaluating a validity index.
 *
 * Either a finite real value or the distinguished undefined state, which is returned whenever
 * a defining denominator is zero and no guard applies.
 * Undefined is absorbing: any arithmetic with an undefined operand yields undefined,
 * and division by an exact zero also yields undefined.
 * A non-finite value can never be stored.
 */
class IndexResult {
public:
    /**
     * Undefined result.
     */
    IndexResult() = default;

    /**
     * @param value Result value, must be finite.
     */
    explicit IndexResult(double value) {
        if (!std::isfinite(value)) {
            throw std::domain_error("index value must be finite");
        }
        my_value = value;
    }

    static IndexResult undefined() {
        return IndexResult();
    }

    /**
     * @return Defined result if `value` is finite, otherwise undefined.
     */
    static IndexResult from(double value) {
        return std::isfinite(value) ? IndexResult(value) : IndexResult();
    }

    bool is_defined() const {
        return my_value.has_value();
    }

    explicit operator bool() const {
        return is_defined();
    }

    /**
     * @return The value. Throws `std::logic_error` if undefined.
     */
    double value() const {
        if (!my_value) {
            throw std::logic_error("index result is undefined");
        }
        return *my_value;
    }

    double value_or(double fallback) const {
        return my_value.value_or(fallback);
    }

    /**
     * Undefined compares equal only to undefined.
     */
    friend bool operator==(const IndexResult&, const IndexResult&) = default;

    friend IndexResult operator+(const IndexResult& a, const IndexResult& b) {
        if (!a || !b) {
            return {};
        }
        return from(*a.my_value + *b.my_value);
    }

    friend IndexResult operator-(const IndexResult& a, const IndexResult& b) {
        if (!a || !b) {
            return {};
        }
        return from(*a.my_value - *b.my_value);
    }

    friend IndexResult operator*(const IndexResult& a, const IndexResult& b) {
        if (!a || !b) {
            return {};
        }
        return from(*a.my_value * *b.my_value);
    }

    friend IndexResult operator/(const IndexResult& a, const IndexResult& b) {
        if (!a || !b || *b.my_value == 0) {
            return {};
        }
        return from(*a.my_value / *b.my_value);
    }

private:
    std::optional<double> my_value;
};

/**
 * Divide two reals, returning undefined on an exact zero denominator.
 */
inline IndexResult safe_divide(double numerator, double denominator) {
    return IndexResult(numerator) / IndexResult(denominator);
}

/**
 * @return The value as a string, or `"undefined"`.
 */
inline std::string to_string(const IndexResult& r) {
    if (!r) {
        return "undefined";
    }
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.10g", r.value());
    return buffer;
}

}

#endif
