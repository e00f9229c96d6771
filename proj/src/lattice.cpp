#include "ringunits/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ringunits {

namespace {

bool is_zero_row(const IntVector& r) {
    return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

// row_i -= q * row_k, from column `from` on
void sub_multiple(IntVector& row_i, const IntVector& row_k, const Integer& q, std::size_t from) {
    for (std::size_t j = from; j < row_i.size(); ++j)
        if (row_k[j] != 0) row_i[j] -= q * row_k[j];
}

}  // namespace

IntegerLattice IntegerLattice::from_generators(std::size_t dimension, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<IntVector> big;
    big.reserve(rows.size());
    for (const auto& r : rows) {
        IntVector v;
        v.reserve(r.size());
        for (auto x : r) v.emplace_back(static_cast<long>(x));
        big.push_back(std::move(v));
    }
    return from_generators(dimension, big);
}

IntegerLattice IntegerLattice::from_generators(std::size_t dimension, const std::vector<IntVector>& rows) {
    IntegerLattice lat;
    lat.dim_ = dimension;
    std::vector<IntVector> work;
    for (const auto& r : rows) {
        if (r.size() != dimension) throw std::invalid_argument("lattice generator has wrong dimension");
        if (!is_zero_row(r)) work.push_back(r);
    }
    // Deduplicate before elimination; generator sets from group enumerations repeat a lot.
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());

    std::size_t top = 0;
    for (std::size_t col = 0; col < dimension && top < work.size(); ++col) {
        while (true) {
            // Smallest nonzero |entry| in this column among the unprocessed rows.
            std::size_t best = work.size();
            for (std::size_t i = top; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                if (best == work.size() || abs(work[i][col]) < abs(work[best][col])) best = i;
            }
            if (best == work.size()) break;
            std::swap(work[top], work[best]);
            bool others = false;
            for (std::size_t i = top + 1; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), work[i][col].get_mpz_t(), work[top][col].get_mpz_t());
                sub_multiple(work[i], work[top], q, col);
                if (work[i][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (work[top][col] == 0) continue;
        if (work[top][col] < 0)
            for (auto& x : work[top]) x = -x;
        lat.pivots_.push_back(col);
        ++top;
        // Drop rows that became zero to keep the active set small.
        work.erase(std::remove_if(work.begin() + static_cast<std::ptrdiff_t>(top), work.end(), is_zero_row), work.end());
    }
    work.resize(top);

    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t k = 0; k < work.size(); ++k) {
        const std::size_t pc = lat.pivots_[k];
        for (std::size_t i = 0; i < k; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), work[i][pc].get_mpz_t(), work[k][pc].get_mpz_t());
            if (q != 0) sub_multiple(work[i], work[k], q, pc);
        }
    }
    lat.hnf_ = std::move(work);

    lat.small_ok_ = true;
    for (const auto& r : lat.hnf_) {
        std::vector<std::int64_t> s;
        s.reserve(r.size());
        for (const auto& x : r) {
            if (!x.fits_slong_p()) {
                lat.small_ok_ = false;
                break;
            }
            s.push_back(x.get_si());
        }
        if (!lat.small_ok_) break;
        lat.hnf_small_.push_back(std::move(s));
    }
    if (!lat.small_ok_) lat.hnf_small_.clear();
    return lat;
}

std::optional<Integer> IntegerLattice::index() const {
    if (!full_rank()) return std::nullopt;
    Integer idx = 1;
    for (std::size_t k = 0; k < hnf_.size(); ++k) idx *= hnf_[k][pivots_[k]];
    return idx;
}

bool IntegerLattice::contains(std::span<const Integer> v) const {
    if (v.size() != dim_) throw std::invalid_argument("lattice membership: dimension mismatch");
    IntVector w(v.begin(), v.end());
    std::size_t k = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) {
            const Integer& piv = hnf_[k][j];
            if (w[j] != 0) {
                if (!mpz_divisible_p(w[j].get_mpz_t(), piv.get_mpz_t())) return false;
                Integer q = w[j] / piv;
                sub_multiple(w, hnf_[k], q, j);
            }
            ++k;
        } else if (w[j] != 0) {
            return false;
        }
    }
    return true;
}

bool IntegerLattice::contains(std::span<const std::int64_t> v) const {
    if (v.size() != dim_) throw std::invalid_argument("lattice membership: dimension mismatch");
    if (small_ok_) {
        // Small dimension; a stack buffer avoids allocation in the hot loop.
        constexpr std::size_t kStack = 64;
        std::int64_t stack_buf[kStack];
        std::vector<std::int64_t> heap_buf;
        std::int64_t* w = stack_buf;
        if (dim_ > kStack) {
            heap_buf.resize(dim_);
            w = heap_buf.data();
        }
        std::copy(v.begin(), v.end(), w);
        bool overflow = false;
        std::size_t k = 0;
        for (std::size_t j = 0; j < dim_ && !overflow; ++j) {
            if (k < pivots_.size() && pivots_[k] == j) {
                const auto& row = hnf_small_[k];
                const std::int64_t piv = row[j];
                if (w[j] != 0) {
                    if (w[j] % piv != 0) return false;
                    const std::int64_t q = w[j] / piv;
                    for (std::size_t c = j; c < dim_; ++c) {
                        std::int64_t prod = 0;
                        if (__builtin_mul_overflow(q, row[c], &prod) || __builtin_sub_overflow(w[c], prod, &w[c])) {
                            overflow = true;
                            break;
                        }
                    }
                }
                ++k;
            } else if (w[j] != 0) {
                return false;
            }
        }
        if (!overflow) return true;
    }
    IntVector big;
    big.reserve(v.size());
    for (auto x : v) big.emplace_back(static_cast<long>(x));
    return contains(std::span<const Integer>(big));
}

std::string IntegerLattice::dump() const {
    std::ostringstream os;
    for (const auto& r : hnf_) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j].get_str();
        os << '\n';
    }
    return os.str();
}

}  // namespace ringunits
