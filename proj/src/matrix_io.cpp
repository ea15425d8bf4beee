#include "ekr/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ekr {

void write_matrix_coo(std::ostream& out, const DenseRationalMatrix& m) {
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            if (!m.at(i, j).is_zero()) ++nnz;
        }
    }
    out << "rational-coo " << m.dim() << " " << m.dim() << " " << nnz << "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            if (!m.at(i, j).is_zero()) {
                out << i << " " << j << " " << m.at(i, j).str() << "\n";
            }
        }
    }
}

DenseRationalMatrix read_matrix_coo(std::istream& in) {
    std::string magic;
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(in >> magic >> rows >> cols >> nnz) || magic != "rational-coo") {
        throw std::domain_error("matrix file: expected 'rational-coo N N nnz' header");
    }
    if (rows != cols) {
        throw std::domain_error("matrix file: matrix must be square");
    }
    DenseRationalMatrix m(rows);
    for (std::size_t entry = 0; entry < nnz; ++entry) {
        std::size_t i = 0, j = 0;
        std::string value;
        if (!(in >> i >> j >> value)) {
            throw std::domain_error("matrix file: truncated at entry " + std::to_string(entry));
        }
        if (i >= rows || j >= cols || i > j) {
            throw std::domain_error("matrix file: bad upper-triangle coordinates " +
                                    std::to_string(i) + "," + std::to_string(j));
        }
        const Rational parsed = Rational::parse(value);
        m.at(i, j) = parsed;
        m.at(j, i) = parsed;
    }
    return m;
}

} // namespace ekr
