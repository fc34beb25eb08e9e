#include "qalg/fiber_algebra.hpp"

#include <algorithm>
#include <set>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

using Combo = std::vector<std::pair<std::size_t, Rat>>;

Combo normalize(Combo combo) {
    std::map<std::size_t, Rat> acc;
    for (auto& [k, c] : combo)
        acc[k] += c;
    Combo out;
    for (auto& [k, c] : acc)
        if (c != 0)
            out.emplace_back(k, c);
    return out;
}

Combo scale(const Combo& combo, const Rat& s) {
    Combo out;
    if (s == 0)
        return out;
    for (const auto& [k, c] : combo)
        out.emplace_back(k, c * s);
    return out;
}

} // namespace

FiberAlgebra::FiberAlgebra(std::vector<Class> classes, const std::string& unit_label,
                           std::vector<std::string> generator_labels,
                           const std::vector<ProductEntry>& products)
    : classes_(std::move(classes)) {
    if (classes_.empty())
        throw FiberError("fiber algebra needs at least the unit class");
    std::set<std::string> labels;
    for (const auto& c : classes_) {
        if (c.label.empty())
            throw FiberError("fiber class labels must be nonempty");
        if (!labels.insert(c.label).second)
            throw FiberError("duplicate fiber class label '" + c.label + "'");
        if (c.degree < 0)
            throw FiberError("fiber class degrees must be non-negative");
    }

    auto unit_idx = index_of(unit_label);
    if (!unit_idx)
        throw FiberError("unit label '" + unit_label + "' is not a fiber class");
    unit_ = *unit_idx;
    if (classes_[unit_].degree != 0)
        throw FiberError("the unit class must have degree 0");
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (i != unit_ && classes_[i].degree == 0)
            throw FiberError("degree 0 must contain only the unit class");

    for (const auto& g : generator_labels) {
        auto gi = index_of(g);
        if (!gi)
            throw FiberError("generator label '" + g + "' is not a fiber class");
        if (*gi == unit_)
            throw FiberError("the unit cannot be a generator");
        generators_.push_back(*gi);
    }

    const std::size_t n = classes_.size();
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    mult_.assign(n, std::vector<Combo>(n));

    auto put = [&](std::size_t i, std::size_t j, Combo value) {
        if (given[i][j]) {
            if (normalize(std::move(value)) != mult_[i][j])
                throw FiberError("conflicting structure constants for " + classes_[i].label + "*" +
                                 classes_[j].label);
            return;
        }
        given[i][j] = true;
        mult_[i][j] = normalize(std::move(value));
    };

    for (const auto& entry : products) {
        auto li = index_of(entry.left);
        auto ri = index_of(entry.right);
        if (!li || !ri)
            throw FiberError("product entry names an unknown class");
        Combo combo;
        for (const auto& t : entry.value) {
            auto ki = index_of(t.cls);
            if (!ki)
                throw FiberError("product value names an unknown class '" + t.cls + "'");
            combo.emplace_back(*ki, t.coeff);
        }
        put(*li, *ri, std::move(combo));
    }

    /* Unit row and column. */
    for (std::size_t i = 0; i < n; ++i) {
        put(unit_, i, Combo{{i, Rat(1)}});
        put(i, unit_, Combo{{i, Rat(1)}});
    }

    /* Fill the missing half by graded commutativity; anything still
       missing is the zero product. */
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (given[i][j] || !given[j][i])
                continue;
            int sign = (classes_[i].degree % 2 != 0 && classes_[j].degree % 2 != 0) ? -1 : 1;
            put(i, j, scale(mult_[j][i], Rat(sign)));
        }

    /* Axioms. */
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int d = classes_[i].degree + classes_[j].degree;
            for (const auto& [k, c] : mult_[i][j])
                if (classes_[k].degree != d)
                    throw FiberError("product " + classes_[i].label + "*" + classes_[j].label +
                                     " violates the grading");
            int sign = (classes_[i].degree % 2 != 0 && classes_[j].degree % 2 != 0) ? -1 : 1;
            if (mult_[i][j] != scale(mult_[j][i], Rat(sign)))
                throw FiberError("products " + classes_[i].label + "*" + classes_[j].label +
                                 " break graded commutativity");
        }
    for (std::size_t i = 0; i < n; ++i)
        if (classes_[i].degree % 2 != 0 && !mult_[i][i].empty())
            throw FiberError("odd class " + classes_[i].label + " must square to zero");

    auto mul_combo = [&](const Combo& a, std::size_t j) {
        Combo out;
        for (const auto& [k, c] : a)
            for (const auto& [l, d] : mult_[k][j])
                out.emplace_back(l, c * d);
        return normalize(std::move(out));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Combo left = mul_combo(mult_[i][j], k);
                Combo right;
                for (const auto& [l, c] : mult_[j][k])
                    for (const auto& [m, d] : mult_[i][l])
                        right.emplace_back(m, c * d);
                right = normalize(std::move(right));
                if (left != right)
                    throw FiberError("structure constants are not associative at (" +
                                     classes_[i].label + "," + classes_[j].label + "," +
                                     classes_[k].label + ")");
            }

    /* Factorizations for Leibniz: x = scale * (gen * rest). */
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        return classes_[a].degree < classes_[b].degree;
    });
    for (std::size_t idx : order) {
        if (idx == unit_ || is_generator(idx))
            continue;
        bool found = false;
        for (std::size_t g : generators_) {
            for (std::size_t y = 0; y < n && !found; ++y) {
                const Combo& prod = mult_[g][y];
                if (prod.size() == 1 && prod[0].first == idx && prod[0].second != 0) {
                    factorization_[idx] = Factorization{g, y, 1 / prod[0].second};
                    found = true;
                }
            }
            if (found)
                break;
        }
        if (!found)
            throw FiberError("class " + classes_[idx].label +
                             " is not a scalar multiple of generator*class; cannot propagate "
                             "differentials to it");
    }
}

bool FiberAlgebra::is_generator(std::size_t i) const {
    return std::find(generators_.begin(), generators_.end(), i) != generators_.end();
}

std::optional<std::size_t> FiberAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].label == label)
            return i;
    return std::nullopt;
}

int FiberAlgebra::top_degree() const {
    int top = 0;
    for (const auto& c : classes_)
        top = std::max(top, c.degree);
    return top;
}

std::vector<std::size_t> FiberAlgebra::classes_of_degree(int q) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].degree == q)
            out.push_back(i);
    return out;
}

const std::vector<std::pair<std::size_t, Rat>>& FiberAlgebra::product(std::size_t i,
                                                                      std::size_t j) const {
    return mult_[i][j];
}

const FiberAlgebra::Factorization& FiberAlgebra::factorization(std::size_t i) const {
    auto it = factorization_.find(i);
    if (it == factorization_.end())
        throw FiberError("class " + classes_[i].label + " has no stored factorization");
    return it->second;
}

FiberPtr sphere_fiber(const std::string& label, int degree) {
    std::vector<FiberAlgebra::Class> classes{{"1", 0}, {label, degree}};
    return std::make_shared<const FiberAlgebra>(std::move(classes), "1",
                                                std::vector<std::string>{label},
                                                std::vector<FiberAlgebra::ProductEntry>{});
}

} // namespace qalg
