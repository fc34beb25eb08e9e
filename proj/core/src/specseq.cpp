#include "qalg/specseq.hpp"

#include <algorithm>
#include <sstream>

#include "qalg/errors.hpp"

namespace qalg {

long Page::dim(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second.dim();
}

const PageEntry* Page::entry(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? nullptr : &it->second;
}

const QMatrix* Page::differential(int p, int q) const {
    auto it = differentials.find({p, q});
    return it == differentials.end() ? nullptr : &it->second;
}

bool Page::differentials_all_zero() const {
    return std::all_of(differentials.begin(), differentials.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

std::string Page::grid(int max_col) const {
    int width = 1;
    for (const auto& [pq, e] : entries)
        width = std::max(width, static_cast<int>(std::to_string(e.dim()).size()));
    std::ostringstream os;
    os << "E" << r << " (columns 0.." << std::min(max_col, col_bound) << ")\n";
    for (int q = row_bound; q >= 0; --q) {
        os << "  q=" << q << " |";
        for (int p = 0; p <= std::min(max_col, col_bound); ++p) {
            std::string d = std::to_string(dim(p, q));
            os << ' ' << std::string(width - d.size(), ' ') << d;
        }
        os << '\n';
    }
    os << "        ";
    for (int p = 0; p <= std::min(max_col, col_bound); ++p)
        os << std::string(width, '-') << (p == std::min(max_col, col_bound) ? "" : " ");
    os << " p\n";
    return os.str();
}

namespace {

std::string tensor_label(const BaseRing& base, const Monomial& b, const FiberAlgebra& fiber,
                         std::size_t f) {
    const bool base_one = b.is_one();
    const bool fiber_one = f == fiber.unit();
    if (base_one && fiber_one)
        return "1";
    if (base_one)
        return fiber.cls(f).label;
    if (fiber_one)
        return format_monomial(b, *base.ring());
    return format_monomial(b, *base.ring()) + "*" + fiber.cls(f).label;
}

/* Element of (base tensor fiber): fiber class index -> base polynomial. */
using TensorVal = std::map<std::size_t, Polynomial>;

TensorVal tensor_zero() { return {}; }

void tensor_add(TensorVal& acc, std::size_t f, const Polynomial& u) {
    if (u.is_zero())
        return;
    auto it = acc.find(f);
    if (it == acc.end()) {
        acc.emplace(f, u);
    } else {
        Polynomial sum = it->second + u;
        if (sum.is_zero())
            acc.erase(it);
        else
            it->second = sum;
    }
}

} // namespace

Page build_e2(BaseRingPtr base, FiberPtr fiber, int col_bound, int row_bound) {
    if (col_bound < 0 || row_bound < 0)
        throw SpecseqError("page bounds must be non-negative");
    Page page;
    page.r = 2;
    page.col_bound = col_bound;
    page.row_bound = row_bound;
    page.exact_col = col_bound;
    page.tensor_basis = true;
    page.base = base;
    page.fiber = fiber;

    for (int q = 0; q <= row_bound; ++q) {
        std::vector<std::size_t> fclasses = fiber->classes_of_degree(q);
        if (fclasses.empty())
            continue;
        for (int p = 0; p <= col_bound; ++p) {
            std::vector<Monomial> bs = base->basis(p);
            if (bs.empty())
                continue;
            PageEntry entry;
            for (std::size_t f : fclasses)
                for (const auto& b : bs) {
                    entry.labels.push_back(tensor_label(*base, b, *fiber, f));
                    entry.tensor.emplace_back(b, f);
                }
            page.entries.emplace(std::make_pair(p, q), std::move(entry));
        }
    }
    return page;
}

void apply_leibniz(Page& page, const DifferentialSpec& spec) {
    if (!page.tensor_basis)
        throw SpecseqError("cannot apply a differential spec: the tensor basis was lost on an "
                           "earlier page turn");
    if (spec.page != page.r)
        throw SpecseqError("differential spec targets page " + std::to_string(spec.page) +
                           " but the current page is " + std::to_string(page.r));
    const BaseRing& base = *page.base;
    const FiberAlgebra& fiber = *page.fiber;
    const int r = page.r;

    /* Differential on each fiber generator, validated and reduced. */
    std::vector<TensorVal> dval(fiber.size());
    std::vector<bool> have(fiber.size(), false);
    for (const auto& [label, terms] : spec.images) {
        auto gi = fiber.index_of(label);
        if (!gi)
            throw SpecseqError("differential spec names unknown fiber class '" + label + "'");
        if (!fiber.is_generator(*gi))
            throw SpecseqError("differential spec must assign fiber generators; '" + label +
                               "' is not one");
        int q = fiber.cls(*gi).degree;
        TensorVal val;
        for (const auto& term : terms) {
            auto fi = fiber.index_of(term.fiber);
            if (!fi)
                throw SpecseqError("differential value names unknown fiber class '" + term.fiber +
                                   "'");
            Polynomial u = base.reduce(term.base);
            if (u.is_zero())
                continue;
            auto udeg = u.homogeneous_degree();
            if (!udeg || *udeg != r)
                throw DegreeMismatch("differential value base part must be homogeneous of degree " +
                                     std::to_string(r));
            if (fiber.cls(*fi).degree != q - r + 1)
                throw DegreeMismatch("differential value fiber part must have degree " +
                                     std::to_string(q - r + 1));
            tensor_add(val, *fi, u);
        }
        dval[*gi] = std::move(val);
        have[*gi] = true;
    }
    for (std::size_t g : fiber.generators())
        have[g] = true; /* unassigned generators get the zero differential */
    have[fiber.unit()] = true;

    /* Leibniz on factored classes, lowest degree first. */
    std::vector<std::size_t> order(fiber.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&fiber](std::size_t a, std::size_t b) {
        return fiber.cls(a).degree < fiber.cls(b).degree;
    });
    for (std::size_t idx : order) {
        if (have[idx])
            continue;
        const auto& fac = fiber.factorization(idx);
        const std::size_t g = fac.gen;
        const std::size_t y = fac.rest;
        if (!have[g] || !have[y])
            throw SpecseqError("factorization order broke while propagating differentials");
        TensorVal val;
        /* d(g)*y */
        for (const auto& [f, u] : dval[g])
            for (const auto& [k, c] : fiber.product(f, y))
                tensor_add(val, k, u.scaled(c));
        /* (-1)^{|g|} g*d(y); moving g past the degree-r base part costs
           another (-1)^{|g| r}. */
        int gdeg = fiber.cls(g).degree;
        int sign = (gdeg % 2 != 0) ? -1 : 1;
        if (gdeg % 2 != 0 && r % 2 != 0)
            sign = -sign;
        for (const auto& [f, u] : dval[y])
            for (const auto& [k, c] : fiber.product(g, f))
                tensor_add(val, k, u.scaled(c * sign));
        /* x = scale*(g*y), so d(x) = scale*d(g*y). */
        TensorVal scaled;
        for (const auto& [f, u] : val)
            tensor_add(scaled, f, u.scaled(fac.scale));
        dval[idx] = std::move(scaled);
        have[idx] = true;
    }

    /* Matrices: d(b (x) x) = (-1)^{|b|} b*d(x). */
    page.differentials.clear();
    for (const auto& [pq, entry] : page.entries) {
        const auto [p, q] = pq;
        const int tp = p + r;
        const int tq = q - r + 1;
        if (tq < 0 || tq > page.row_bound)
            continue;
        if (tp > page.col_bound)
            continue; /* unknown beyond the window; accounted in exact_col */
        const PageEntry* target = page.entry(tp, tq);

        std::vector<Monomial> tbasis = page.base->basis(tp);
        std::vector<std::size_t> tclasses = fiber.classes_of_degree(tq);
        auto target_index = [&](const Monomial& m, std::size_t f) -> std::size_t {
            std::size_t block = 0;
            while (block < tclasses.size() && tclasses[block] != f)
                ++block;
            auto it = std::lower_bound(tbasis.begin(), tbasis.end(), m, MonoLexGreater{});
            return block * tbasis.size() + static_cast<std::size_t>(it - tbasis.begin());
        };

        const std::size_t tdim = target ? static_cast<std::size_t>(target->dim()) : 0;
        QMatrix mat(tdim, entry.labels.size());
        bool nonzero = false;
        for (std::size_t col = 0; col < entry.tensor.size(); ++col) {
            const auto& [b, x] = entry.tensor[col];
            int sign = (p % 2 != 0) ? -1 : 1;
            for (const auto& [f, u] : dval[x]) {
                Polynomial img = base.reduce(Polynomial::term(base.ring(), b, Rat(sign)) * u);
                if (img.is_zero())
                    continue;
                if (tdim == 0)
                    throw SpecseqError("nonzero differential lands in an empty bidegree");
                for (const auto& [m, c] : img.terms()) {
                    mat.at(target_index(m, f), col) += c;
                    nonzero = true;
                }
            }
        }
        if (tdim > 0 || nonzero)
            page.differentials.emplace(pq, std::move(mat));
    }

    /* d after d = 0 wherever two stored differentials compose. */
    for (const auto& [pq, m1] : page.differentials) {
        const auto [p, q] = pq;
        const QMatrix* m2 = page.differential(p + r, q - r + 1);
        if (!m2)
            continue;
        if (!((*m2) * m1).is_zero())
            throw SpecseqError("d after d is nonzero at (" + std::to_string(p) + "," +
                               std::to_string(q) + ")");
    }
}

Page turn_page(const Page& page) {
    const int r = page.r;
    Page next;
    next.r = r + 1;
    next.col_bound = page.col_bound;
    next.row_bound = page.row_bound;
    next.base = page.base;
    next.fiber = page.fiber;

    const bool trivial = page.differentials_all_zero();
    next.exact_col = trivial ? page.exact_col : std::min(page.exact_col, page.col_bound - r);
    next.tensor_basis = page.tensor_basis && trivial;

    /* d after d = 0 before taking homology. */
    for (const auto& [pq, m1] : page.differentials) {
        const auto [p, q] = pq;
        const QMatrix* m2 = page.differential(p + r, q - r + 1);
        if (m2 && !((*m2) * m1).is_zero())
            throw SpecseqError("d after d is nonzero at (" + std::to_string(p) + "," +
                               std::to_string(q) + ")");
    }

    for (const auto& [pq, entry] : page.entries) {
        const auto [p, q] = pq;
        const std::size_t n = entry.labels.size();

        /* Kernel of the outgoing differential. */
        std::vector<std::vector<Rat>> kernel;
        const QMatrix* out = page.differential(p, q);
        if (out && !out->is_zero()) {
            QMatrix k = out->kernel_basis();
            for (std::size_t j = 0; j < k.cols(); ++j)
                kernel.push_back(k.column(j));
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rat> v(n, Rat(0));
                v[j] = 1;
                kernel.push_back(std::move(v));
            }
        }

        /* Image of the incoming differential. */
        std::vector<std::vector<Rat>> image;
        const QMatrix* in = page.differential(p - r, q + r - 1);
        if (in && !in->is_zero())
            for (std::size_t j = 0; j < in->cols(); ++j) {
                std::vector<Rat> v = in->column(j);
                if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; }))
                    image.push_back(std::move(v));
            }

        QuotientBasis quo = quotient_basis(n, kernel, image);
        if (quo.representatives.empty())
            continue;
        if (quo.representatives.size() > n)
            throw SpecseqError("page turn increased a dimension"); /* impossible by construction */

        PageEntry ne;
        for (std::size_t k = 0; k < quo.representatives.size(); ++k) {
            std::string label = "[" + entry.labels[quo.pivots[k]] + "]";
            ne.labels.push_back(std::move(label));
            if (next.tensor_basis)
                ne.tensor.push_back(entry.tensor[quo.pivots[k]]);
        }
        next.entries.emplace(pq, std::move(ne));
    }
    return next;
}

namespace {

const DifferentialSpec* spec_for_page(const std::vector<DifferentialSpec>& specs, int r) {
    for (const auto& s : specs)
        if (s.page == r)
            return &s;
    return nullptr;
}

} // namespace

SpectralRun run_to_infinity(BaseRingPtr base, FiberPtr fiber,
                            const std::vector<DifferentialSpec>& specs, int bound,
                            std::optional<int> col_bound_override) {
    for (const auto& s : specs) {
        if (s.page < 2)
            throw SpecseqError("differentials start on page 2");
        int count = 0;
        for (const auto& t : specs)
            if (t.page == s.page)
                ++count;
        if (count > 1)
            throw SpecseqError("multiple differential specs for page " + std::to_string(s.page));
    }

    int margin = 0;
    for (const auto& s : specs)
        margin += s.page;
    const int row_bound = fiber->top_degree();
    const int col_bound = col_bound_override.value_or(bound + margin);
    const int last_page = row_bound + 1;

    SpectralRun run{.trace = {}, .totals = GradedDims(bound), .collapse_page = 2};
    Page cur = build_e2(std::move(base), fiber, col_bound, row_bound);
    run.trace.push_back(cur);

    int last_nonzero = 0;
    for (int r = 2; r <= last_page; ++r) {
        if (const DifferentialSpec* spec = spec_for_page(specs, r)) {
            apply_leibniz(cur, *spec);
            if (!cur.differentials_all_zero())
                last_nonzero = r;
            cur = turn_page(cur);
            run.trace.push_back(cur);
            continue;
        }
        /* No spec: every differential in the exact window must vanish for
           structural reasons. */
        int stale_before = cur.exact_col + 1;
        for (const auto& [pq, entry] : cur.entries) {
            const auto [p, q] = pq;
            if (p > cur.exact_col || entry.dim() == 0)
                continue;
            const int tq = q - r + 1;
            const int tp = p + r;
            if (tq < 0 || tq > row_bound)
                continue;
            long tdim;
            if (tp <= cur.col_bound) {
                tdim = cur.dim(tp, tq);
            } else if (cur.tensor_basis) {
                tdim = cur.base->dim(tp) * cur.fiber->dim(tq);
            } else {
                /* Target beyond the window and no structure to rule it
                   out: the source column goes stale. */
                stale_before = std::min(stale_before, p);
                continue;
            }
            if (tdim != 0)
                throw SpecseqError(
                    "page " + std::to_string(r) + " differential (" + std::to_string(p) + "," +
                    std::to_string(q) + ") -> (" + std::to_string(tp) + "," + std::to_string(tq) +
                    ") joins nonzero entries but no differential spec was given");
        }
        cur.exact_col = std::min(cur.exact_col, stale_before - 1);
        cur.r = r + 1;
    }

    if (cur.exact_col < bound)
        throw TruncationTooSmall("the window is exact only through column " +
                                 std::to_string(cur.exact_col) + " but totals up to degree " +
                                 std::to_string(bound) + " were requested");

    if (run.trace.empty() || run.trace.back().r != cur.r)
        run.trace.push_back(cur);
    for (int n = 0; n <= bound; ++n) {
        long total = 0;
        for (int q = 0; q <= std::min(row_bound, n); ++q)
            total += cur.dim(n - q, q);
        run.totals.set(n, total);
    }
    run.collapse_page = last_nonzero ? last_nonzero + 1 : 2;
    return run;
}

bool concentrated_in_row_zero(const Page& page) {
    for (const auto& [pq, entry] : page.entries) {
        const auto [p, q] = pq;
        if (q > 0 && p <= page.exact_col && entry.dim() > 0)
            return false;
    }
    return true;
}

RingComparison compare_with_ring(const GradedDims& totals, const Ideal& ideal,
                                 const MonomialOrder& order) {
    RingComparison cmp{false, hilbert_function(ideal, order, totals.bound()), std::nullopt};
    cmp.mismatch = dims_first_mismatch(totals, cmp.ring_dims);
    cmp.equal = !cmp.mismatch.has_value();
    return cmp;
}

} // namespace qalg
