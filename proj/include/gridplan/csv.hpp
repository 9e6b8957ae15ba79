#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridplan/common.hpp"

namespace gridplan::csv {

// Strict CSV table: header row required, no quoting (input schemas never
// need embedded commas), every record must have the header's arity.
// Errors name the file, 1-based row and column.
class Table {
public:
    static Table read_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ValidationError(path, "cannot open file");
        Table t;
        t.path_ = path;
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            auto fields = split(line);
            if (t.header_.empty()) {
                t.header_ = fields;
                for (size_t i = 0; i < fields.size(); ++i) t.col_index_[fields[i]] = i;
            } else {
                if (fields.size() != t.header_.size()) {
                    throw ValidationError(t.where(lineno, 0),
                                          "expected " + std::to_string(t.header_.size()) +
                                              " fields, got " + std::to_string(fields.size()));
                }
                t.rows_.push_back(std::move(fields));
                t.row_lines_.push_back(lineno);
            }
        }
        if (t.header_.empty()) throw ValidationError(path, "missing header row");
        return t;
    }

    size_t num_rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    const std::string& path() const { return path_; }

    bool has_column(const std::string& name) const { return col_index_.count(name) > 0; }

    size_t column(const std::string& name) const {
        auto it = col_index_.find(name);
        if (it == col_index_.end())
            throw ValidationError(path_, "missing required column '" + name + "'");
        return it->second;
    }

    // Rejects any header not in `known`; catches typos early.
    void require_known_columns(const std::vector<std::string>& known) const {
        for (const auto& h : header_) {
            bool ok = false;
            for (const auto& k : known) ok = ok || (h == k);
            if (!ok) throw ValidationError(path_, "unknown column '" + h + "'");
        }
    }

    const std::string& cell(size_t row, size_t col) const { return rows_[row][col]; }

    std::string get_string(size_t row, const std::string& col) const {
        const std::string& v = cell(row, column(col));
        if (v.empty())
            throw ValidationError(where(row_lines_[row], column(col)), "empty value in '" + col + "'");
        return v;
    }

    double get_double(size_t row, const std::string& col) const {
        const std::string& v = cell(row, column(col));
        double out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || p != v.data() + v.size()) {
            if (v == "inf" || v == "+inf") return kInf;
            throw ValidationError(where(row_lines_[row], column(col)),
                                  "'" + v + "' is not a number in column '" + col + "'");
        }
        return out;
    }

    long get_long(size_t row, const std::string& col) const {
        const std::string& v = cell(row, column(col));
        long out = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || p != v.data() + v.size())
            throw ValidationError(where(row_lines_[row], column(col)),
                                  "'" + v + "' is not an integer in column '" + col + "'");
        return out;
    }

    bool get_bool(size_t row, const std::string& col) const {
        const std::string& v = cell(row, column(col));
        if (v == "1" || v == "true" || v == "TRUE" || v == "True") return true;
        if (v == "0" || v == "false" || v == "FALSE" || v == "False") return false;
        throw ValidationError(where(row_lines_[row], column(col)),
                              "'" + v + "' is not a boolean in column '" + col + "'");
    }

    // "inf" or empty mean unbounded.
    double get_double_or_inf(size_t row, const std::string& col) const {
        const std::string& v = cell(row, column(col));
        if (v.empty() || v == "inf" || v == "+inf") return kInf;
        return get_double(row, col);
    }

    std::string where(size_t lineno, size_t col) const {
        return path_ + ":" + std::to_string(lineno) + ":" + std::to_string(col + 1);
    }
    std::string row_context(size_t row) const { return where(row_lines_[row], 0); }

private:
    static std::vector<std::string> split(const std::string& line) {
        std::vector<std::string> out;
        size_t start = 0;
        while (true) {
            size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                out.push_back(line.substr(start));
                break;
            }
            out.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        return out;
    }

    std::string path_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<size_t> row_lines_;
    std::unordered_map<std::string, size_t> col_index_;
};

// All result files are serialized with 9 significant digits so repeated
// runs are byte-identical.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path) {
        if (!out_) throw ValidationError(path, "cannot open file for writing");
    }
    void row(const std::vector<std::string>& fields) {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }
    void close() { out_.close(); }

private:
    std::ofstream out_;
};

}  // namespace gridplan::csv
