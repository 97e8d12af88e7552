#include "engine/cochain.hpp"

#include <exception>
#include <string>

#include "engine/error.hpp"
#include "engine/parallel.hpp"

namespace conic {

namespace {
std::string index_str(const MultiIndex& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + ")";
}
} // namespace

int weight(const MultiIndex& r) {
    int w = 0;
    for (int x : r) w += x;
    return w;
}

std::vector<MultiIndex> multi_indices(int n, int cutoff) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, cutoff);
    return out;
}

Cochain::Cochain(int level, std::size_t dim, int cutoff,
                 const std::function<Matrix(const MultiIndex&)>& gen, bool parallel)
    : level_(level), dim_(dim), cutoff_(cutoff) {
    if (level < 0 || dim == 0 || cutoff < 0) throw InputError("bad cochain shape");
    const auto idx = multi_indices(level, cutoff);
    std::vector<Matrix> slots(idx.size());
    // Exceptions may not unwind out of a parallel region: stash the first one
    // per slot and rethrow afterwards (first in index order wins, so failure
    // reporting is deterministic).
    std::vector<std::exception_ptr> errs(idx.size());
    auto body = [&](std::size_t i) {
        try {
            slots[i] = gen(idx[i]);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    };
    if (parallel)
        parallel_for(idx.size(), body);
    else
        serial_for(idx.size(), body);
    for (const auto& e : errs)
        if (e) std::rethrow_exception(e);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const std::size_t want = ipow(dim_, static_cast<std::size_t>(weight(idx[i])));
        if (slots[i].rows() != want || slots[i].cols() != want)
            throw InputError("cochain block at " + index_str(idx[i]) + " has wrong size");
        blocks_.emplace(idx[i], std::move(slots[i]));
    }
}

Cochain Cochain::from_blocks(int level, std::size_t dim, int cutoff,
                             std::map<MultiIndex, Matrix> blocks) {
    return Cochain(level, dim, cutoff,
                   [&](const MultiIndex& r) -> Matrix {
                       auto it = blocks.find(r);
                       if (it == blocks.end())
                           throw InputError("missing cochain block at " + index_str(r));
                       return it->second;
                   },
                   false);
}

Cochain Cochain::identity(int level, std::size_t dim, int cutoff) {
    return Cochain(level, dim, cutoff, [&](const MultiIndex& r) {
        return Matrix::identity(ipow(dim, static_cast<std::size_t>(weight(r))));
    });
}

const Matrix& Cochain::block(const MultiIndex& r) const {
    auto it = blocks_.find(r);
    if (it == blocks_.end()) throw InputError("no cochain block at " + index_str(r));
    return it->second;
}

const Matrix& Cochain::block_deg(int r) const {
    if (level_ != 1) throw InputError("block_deg is a level-1 accessor");
    return block(MultiIndex{r});
}

Rational Cochain::scalar_00() const {
    return block(MultiIndex(level_, 0)).at(0, 0);
}

bool Cochain::operator==(const Cochain& o) const {
    return level_ == o.level_ && dim_ == o.dim_ && cutoff_ == o.cutoff_ &&
           blocks_ == o.blocks_;
}

bool Cochain::is_identity() const {
    for (const auto& [r, m] : blocks_)
        if (!m.is_identity()) return false;
    return true;
}

Cochain Cochain::compose(const Cochain& rhs) const {
    require_same_shape(*this, rhs, "compose");
    return Cochain(level_, dim_, cutoff_,
                   [&](const MultiIndex& r) { return block(r) * rhs.block(r); });
}

Cochain Cochain::inverse() const {
    return Cochain(level_, dim_, cutoff_, [&](const MultiIndex& r) -> Matrix {
        try {
            return block(r).inverse();
        } catch (const PropertyError&) {
            throw PropertyError("cochain block at " + index_str(r) + " is singular");
        }
    });
}

void Cochain::check_invertible() const {
    (void)inverse();
}

void require_same_shape(const Cochain& a, const Cochain& b, const char* what) {
    if (a.level() != b.level() || a.dim() != b.dim() || a.cutoff() != b.cutoff())
        throw InputError(std::string("cochain shape mismatch in ") + what);
}

} // namespace conic
