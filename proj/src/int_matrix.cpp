#include "torrec/int_matrix.hpp"

#include <json.hpp>

#include <sstream>

#include "torrec/errors.hpp"

namespace torrec {

IntMatrix::IntMatrix(int dim) : dim_(dim), e_(dim * dim, mpz_class(0)) {
    if (dim != 2 && dim != 3) throw ParseError("matrix dimension must be 2 or 3");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_) throw ParseError("matrix is not square");
        int c = 0;
        for (long v : row) at(r, c++) = v;
        ++r;
    }
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::parse(const std::string& literal) {
    std::vector<std::vector<mpz_class>> rows;
    std::stringstream ss(literal);
    std::string row_text;
    while (std::getline(ss, row_text, ';')) {
        std::vector<mpz_class> row;
        std::stringstream rs(row_text);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            size_t start = cell.find_first_not_of(" \t");
            size_t end = cell.find_last_not_of(" \t");
            if (start == std::string::npos) throw ParseError("empty matrix entry");
            try {
                row.emplace_back(cell.substr(start, end - start + 1));
            } catch (const std::invalid_argument&) {
                throw ParseError("bad integer entry: " + cell);
            }
        }
        rows.push_back(std::move(row));
    }
    int d = static_cast<int>(rows.size());
    if (d != 2 && d != 3) throw ParseError("matrix dimension must be 2 or 3");
    IntMatrix m(d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[r].size()) != d) throw ParseError("matrix is not square");
        for (int c = 0; c < d; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::parse_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON matrix: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("JSON matrix must be an array of arrays");
    // Route through the same path as the text literal so both parse identically.
    std::string literal;
    for (size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) throw ParseError("JSON matrix must be an array of arrays");
        if (r) literal += ';';
        for (size_t c = 0; c < j[r].size(); ++c) {
            if (!j[r][c].is_number_integer())
                throw ParseError("JSON matrix entries must be integers");
            if (c) literal += ',';
            literal += std::to_string(j[r][c].get<long long>());
        }
    }
    return parse(literal);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < dim_; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    IntMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    IntMatrix r(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

mpz_class IntMatrix::det() const {
    if (dim_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

mpz_class IntMatrix::trace() const {
    mpz_class t = 0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

std::string IntMatrix::str() const {
    std::string s;
    for (int r = 0; r < dim_; ++r) {
        if (r) s += ';';
        for (int c = 0; c < dim_; ++c) {
            if (c) s += ',';
            s += at(r, c).get_str();
        }
    }
    return s;
}

IntMatrix matrix_power(const IntMatrix& a, unsigned long n) {
    IntMatrix result = IntMatrix::identity(a.dim());
    IntMatrix base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

}  // namespace torrec
