#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "burgetree/qcombinat.hpp"

namespace burgetree {

namespace {

// Rows of Pascal's triangle are appended on demand; a row is never modified
// once published, so readers hold references without a lock.
class PascalCache {
public:
    const LaurentPoly& get(std::int64_t n, std::int64_t m) {
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<std::int64_t>(rows_.size())) return (*rows_[static_cast<std::size_t>(n)])[static_cast<std::size_t>(m)];
        }
        std::unique_lock lock(mutex_);
        while (static_cast<std::int64_t>(rows_.size()) <= n) {
            const std::size_t r = rows_.size();
            auto row = std::make_unique<std::vector<LaurentPoly>>(r + 1);
            (*row)[0] = LaurentPoly::one();
            (*row)[r] = LaurentPoly::one();
            for (std::size_t k = 1; k < r; ++k) {
                // [r over k] = [r-1 over k-1] + q^k [r-1 over k]
                LaurentPoly v = (*rows_[r - 1])[k - 1];
                v.add_scaled((*rows_[r - 1])[k], static_cast<std::int64_t>(k));
                (*row)[k] = std::move(v);
            }
            rows_.push_back(std::move(row));
        }
        return (*rows_[static_cast<std::size_t>(n)])[static_cast<std::size_t>(m)];
    }

private:
    std::shared_mutex mutex_;
    std::vector<std::unique_ptr<std::vector<LaurentPoly>>> rows_;
};

PascalCache& cache() {
    static PascalCache c;
    return c;
}

const LaurentPoly& zero_poly() {
    static const LaurentPoly z;
    return z;
}

}  // namespace

const LaurentPoly& qbinomial_ref(std::int64_t n, std::int64_t m) {
    if (m < 0 || n - m < 0) return zero_poly();
    return cache().get(n, m);
}

LaurentPoly qbinomial(std::int64_t n, std::int64_t m, std::int64_t base_exp) {
    if (base_exp < 1) throw std::invalid_argument("qbinomial: base exponent must be positive");
    return qbinomial_ref(n, m).substitute_power(base_exp);
}

LaurentPoly q_poch(std::int64_t n, std::int64_t base_exp) {
    if (n < 0) throw std::invalid_argument("q_poch: length must be nonnegative");
    if (base_exp < 1) throw std::invalid_argument("q_poch: base exponent must be positive");
    LaurentPoly r = LaurentPoly::one();
    for (std::int64_t k = 1; k <= n; ++k) {
        LaurentPoly f = r;
        f.add_scaled(r, k * base_exp, -1);
        r = std::move(f);
    }
    return r;
}

}  // namespace burgetree
