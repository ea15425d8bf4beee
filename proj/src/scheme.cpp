#include "ekr/scheme.hpp"

#include <stdexcept>

namespace ekr {

SchemeParams::SchemeParams(int n_, int k_, int t_) : n(n_), k(k_), t(t_) {
    if (!(0 < t && t < k && k < n)) {
        throw std::domain_error("SchemeParams: need 0 < t < k < n, got " + str());
    }
    if (n < 2 * k) {
        throw std::domain_error("SchemeParams: need n >= 2k, got " + str());
    }
}

std::string SchemeParams::str() const {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) +
           ", t=" + std::to_string(t) + ")";
}

Rational BasisVector::coefficient(int index) const {
    const auto it = coeff.find(index);
    return it == coeff.end() ? Rational(0) : it->second;
}

void BasisVector::set(int index, Rational value) {
    if (index < 0 || index > k) {
        throw std::domain_error("BasisVector: index outside [0,k]");
    }
    coeff[index] = std::move(value);
}

bool operator==(const BasisVector& a, const BasisVector& b) {
    if (a.tag != b.tag || a.k != b.k) return false;
    for (int m = 0; m <= a.k; ++m) {
        if (a.coefficient(m) != b.coefficient(m)) return false;
    }
    return true;
}

namespace {

void check_basis_index(int index, int k, const char* what) {
    if (k < 0) throw std::domain_error("basis: negative k");
    if (index < 0 || index > k) {
        throw std::domain_error(std::string(what) + ": index outside [0,k]");
    }
}

} // namespace

BasisVector a_basis_to_d(int i, int k) {
    check_basis_index(i, k, "a_basis_to_d");
    BasisVector out{BasisTag::D, k, {}};
    for (int r = i; r <= k; ++r) {
        Rational c = binomial_q(r, i);
        if ((r - i) % 2 != 0) c = -c;
        out.set(r, std::move(c));
    }
    return out;
}

BasisVector d_basis_to_a(int r, int k) {
    check_basis_index(r, k, "d_basis_to_a");
    BasisVector out{BasisTag::A, k, {}};
    for (int i = r; i <= k; ++i) {
        out.set(i, binomial_q(i, r));
    }
    return out;
}

BasisVector convert(const BasisVector& vec, BasisTag target) {
    if (vec.tag == target) return vec;
    BasisVector out{target, vec.k, {}};
    for (const auto& [index, value] : vec.coeff) {
        if (value.is_zero()) continue;
        const BasisVector expansion = (vec.tag == BasisTag::A) ? a_basis_to_d(index, vec.k)
                                                               : d_basis_to_a(index, vec.k);
        for (const auto& [target_index, unit] : expansion.coeff) {
            Rational updated = out.coefficient(target_index) + value * unit;
            out.coeff[target_index] = std::move(updated);
        }
    }
    // Drop exact zeros produced by cancellation; absent means zero.
    for (auto it = out.coeff.begin(); it != out.coeff.end();) {
        it = it->second.is_zero() ? out.coeff.erase(it) : std::next(it);
    }
    return out;
}

std::vector<Rational> value_by_intersection(const BasisVector& vec) {
    std::vector<Rational> values(vec.k + 1);
    for (int s = 0; s <= vec.k; ++s) {
        if (vec.tag == BasisTag::A) {
            values[s] = vec.coefficient(vec.k - s);
        } else {
            Rational v;
            for (const auto& [r, c] : vec.coeff) {
                v += c * binomial_q(vec.k - s, r);
            }
            values[s] = std::move(v);
        }
    }
    return values;
}

std::size_t dense_dimension(const SchemeParams& params, std::size_t cap) {
    const Integer count = params.vertex_count();
    if (!count.fits_ulong_p() || count.get_ui() > cap) {
        throw ResourceLimitError("dense matrix for " + params.str() + " has C(n,k) = " +
                                 count.get_str() + " rows, above the cap of " +
                                 std::to_string(cap));
    }
    return static_cast<std::size_t>(count.get_ui());
}

namespace {

DenseRationalMatrix fill_by_intersection(const SchemeParams& params,
                                         const std::vector<Rational>& values,
                                         std::size_t cap) {
    const std::size_t dim = dense_dimension(params, cap);
    const std::vector<Subset> subsets = all_subsets(params.n, params.k);
    DenseRationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = values[params.k];
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Rational& v = values[intersection_size(subsets[i], subsets[j])];
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    }
    return m;
}

} // namespace

DenseRationalMatrix build_a(const SchemeParams& params, int i, std::size_t cap) {
    check_basis_index(i, params.k, "build_a");
    std::vector<Rational> values(params.k + 1);
    values[params.k - i] = 1;
    return fill_by_intersection(params, values, cap);
}

DenseRationalMatrix build_d(const SchemeParams& params, int r, std::size_t cap) {
    check_basis_index(r, params.k, "build_d");
    std::vector<Rational> values(params.k + 1);
    for (int s = 0; s <= params.k; ++s) {
        values[s] = binomial_q(params.k - s, r);
    }
    return fill_by_intersection(params, values, cap);
}

DenseRationalMatrix materialize(const SchemeParams& params, const BasisVector& vec,
                                std::size_t cap) {
    if (vec.k != params.k) {
        throw std::domain_error("materialize: basis vector k does not match params");
    }
    return fill_by_intersection(params, value_by_intersection(vec), cap);
}

Rational InnerDistribution::sum() const {
    Rational total;
    for (const Rational& x : e) total += x;
    return total;
}

InnerDistribution inner_distribution(const SetFamily& family) {
    family.validate();
    if (family.blocks.empty()) {
        throw std::domain_error("inner_distribution: empty family");
    }
    const int k = family.k;
    std::vector<long long> pair_counts(k + 1, 0); // by distance i = k - |F ∩ F'|
    for (const Subset& f : family.blocks) {
        for (const Subset& g : family.blocks) {
            pair_counts[k - intersection_size(f, g)] += 1;
        }
    }
    InnerDistribution dist;
    dist.e.resize(k + 1);
    const long long size = static_cast<long long>(family.blocks.size());
    for (int i = 0; i <= k; ++i) {
        dist.e[i] = Rational(pair_counts[i], size);
    }
    return dist;
}

} // namespace ekr
