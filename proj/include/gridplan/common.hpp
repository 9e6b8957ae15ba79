#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridplan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown when an input file or a cross-file reference is malformed.
// `where` carries file/row context when the failure comes from a loader.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
    ValidationError(const std::string& where, const std::string& msg)
        : std::runtime_error(where + ": " + msg) {}
};

// Handle to an LP column. Value is the dense column index.
struct VarId {
    int32_t value = -1;
    bool valid() const { return value >= 0; }
    friend bool operator==(VarId a, VarId b) { return a.value == b.value; }
    friend bool operator<(VarId a, VarId b) { return a.value < b.value; }
};

// Handle to an LP row.
struct RowId {
    int32_t value = -1;
    bool valid() const { return value >= 0; }
    friend bool operator==(RowId a, RowId b) { return a.value == b.value; }
    friend bool operator<(RowId a, RowId b) { return a.value < b.value; }
};

// Sparse affine expression: sum(coef * var) + constant.
struct LinExpr {
    std::vector<std::pair<VarId, double>> terms;
    double constant = 0.0;

    LinExpr() = default;
    /*implicit*/ LinExpr(double c) : constant(c) {}
    /*implicit*/ LinExpr(VarId v) { terms.emplace_back(v, 1.0); }

    LinExpr& add(VarId v, double coef) {
        if (coef != 0.0) terms.emplace_back(v, coef);
        return *this;
    }
    LinExpr& operator+=(const LinExpr& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        constant += o.constant;
        return *this;
    }
    LinExpr& operator*=(double s) {
        for (auto& t : terms) t.second *= s;
        constant *= s;
        return *this;
    }
    friend LinExpr operator*(LinExpr e, double s) { e *= s; return e; }
    friend LinExpr operator*(double s, LinExpr e) { e *= s; return e; }
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { a += b; return a; }
};

inline LinExpr term(VarId v, double coef) {
    LinExpr e;
    e.add(v, coef);
    return e;
}

inline bool nearly_equal(double a, double b, double rel_tol) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel_tol * scale;
}

}  // namespace gridplan
