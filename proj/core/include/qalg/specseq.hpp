#ifndef QALG_SPECSEQ_HPP
#define QALG_SPECSEQ_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qalg/base_ring.hpp"
#include "qalg/fiber_algebra.hpp"
#include "qalg/graded_dims.hpp"
#include "qalg/qmatrix.hpp"

namespace qalg {

/* Values of one differential on the fiber generators, written in
   base (x) fiber coordinates. A term (u, f) contributes u tensor f. */
struct DifferentialSpec {
    struct Term {
        Polynomial base;
        std::string fiber;
    };
    int page = 2;
    std::map<std::string, std::vector<Term>> images; /* generator label -> value */
};

/* Labeled basis of one bidegree. While the page still carries the Kuenneth
   tensor basis, `tensor` stores (base monomial, fiber class) per label. */
struct PageEntry {
    std::vector<std::string> labels;
    std::vector<std::pair<Monomial, std::size_t>> tensor;
    long dim() const { return static_cast<long>(labels.size()); }
};

/* One page of a first-quadrant multiplicative spectral sequence over Q.
   Entries are stored for 0 <= p <= col_bound, 0 <= q <= row_bound; absent
   bidegrees are zero. Differential matrices map (p,q) to (p+r, q-r+1),
   columns indexed by the source basis; an absent matrix is zero.

   exact_col tracks how far the truncated computation is still exact:
   entries in columns <= exact_col equal the untruncated page. */
class Page {
public:
    int r = 2;
    int col_bound = 0;
    int row_bound = 0;
    int exact_col = 0;
    bool tensor_basis = false;
    BaseRingPtr base;
    FiberPtr fiber;
    std::map<std::pair<int, int>, PageEntry> entries;
    std::map<std::pair<int, int>, QMatrix> differentials;

    long dim(int p, int q) const;
    const PageEntry* entry(int p, int q) const;
    const QMatrix* differential(int p, int q) const;
    bool differentials_all_zero() const;

    /* Dimension chart, rows q top-down, columns 0..max_col. */
    std::string grid(int max_col) const;
};

/* Kuenneth E2 page: entry (p,q) has basis {b (x) f} for b a degree-p
   standard monomial of the base and f a degree-q fiber class. */
Page build_e2(BaseRingPtr base, FiberPtr fiber, int col_bound, int row_bound);

/* Fills the differentials of the page from the generator images by
   multiplicativity and the graded Leibniz rule, and checks d after d = 0.
   The page must still carry the tensor basis. */
void apply_leibniz(Page& page, const DifferentialSpec& spec);

/* Homology at every bidegree: ker(outgoing)/im(incoming) with exact
   linear algebra. Quotient labels prefer earlier source basis elements. */
Page turn_page(const Page& page);

struct SpectralRun {
    std::vector<Page> trace; /* E2 and every page after an applied turn */
    GradedDims totals;       /* total-degree dims of the final page */
    int collapse_page = 2;   /* all differentials vanish from here on */
};

/* Runs the sequence until every differential within the window vanishes
   for structural reasons (zero source or target, or beyond the fiber
   rows). Differentials not covered by a spec must vanish structurally;
   otherwise this refuses rather than guessing. The report covers total
   degrees 0..bound and is exact there by construction of the margins:
   the column window defaults to bound plus the sum of the spec pages.
   A smaller explicit window that cannot stay exact through the bound is
   refused with TruncationTooSmall rather than reported. */
SpectralRun run_to_infinity(BaseRingPtr base, FiberPtr fiber,
                            const std::vector<DifferentialSpec>& specs, int bound,
                            std::optional<int> col_bound_override = std::nullopt);

/* True when every entry with q > 0 in the exact window is zero. */
bool concentrated_in_row_zero(const Page& page);

struct RingComparison {
    bool equal = false;
    GradedDims ring_dims;
    std::optional<DimsMismatch> mismatch;
};

/* Compares total dims against the Hilbert function of R/I. */
RingComparison compare_with_ring(const GradedDims& totals, const Ideal& ideal,
                                 const MonomialOrder& order);

} // namespace qalg

#endif
