#include "qalg/jsonio.hpp"

#include <fstream>

#include "qalg/errors.hpp"

namespace qalg::io {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error in '") + path + "': " + e.what(),
                         e.byte);
    }
}

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string need_string(const json& j, const char* what) {
    if (!j.is_string())
        throw SchemaError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

int need_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw SchemaError(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

RingPtr ring_from_json(const json& j) {
    const json& vars = need(j, "vars");
    if (!vars.is_array() || vars.empty())
        throw SchemaError("'vars' must be a nonempty array");
    std::vector<VarSpec> specs;
    for (const auto& v : vars)
        specs.push_back({need_string(need(v, "name"), "variable name"),
                         need_int(need(v, "degree"), "variable degree")});
    return make_ring(std::move(specs));
}

json ring_to_json(const RingSpec& ring) {
    json vars = json::array();
    for (std::size_t i = 0; i < ring.size(); ++i)
        vars.push_back({{"name", ring.name(i)}, {"degree", ring.degree(i)}});
    return {{"vars", vars}};
}

MonomialOrder order_from_json(const json& j, RingPtr ring) {
    OrderKind kind = order_kind_from_name(need_string(need(j, "kind"), "order kind"));
    std::vector<std::string> names;
    if (j.contains("precedence")) {
        for (const auto& n : j.at("precedence"))
            names.push_back(need_string(n, "precedence entry"));
    } else {
        for (std::size_t i = 0; i < ring->size(); ++i)
            names.push_back(ring->name(i));
    }
    return MonomialOrder::with_names(std::move(ring), kind, names);
}

json order_to_json(const MonomialOrder& order) {
    return {{"kind", order_kind_name(order.kind())}, {"precedence", order.precedence_names()}};
}

IdealFile ideal_from_json(const json& j) {
    RingPtr ring = ring_from_json(need(j, "ring"));
    std::vector<Polynomial> gens;
    for (const auto& g : need(j, "generators"))
        gens.push_back(Polynomial::parse(need_string(g, "generator"), ring));
    MonomialOrder order = j.contains("order") ? order_from_json(j.at("order"), ring)
                                              : MonomialOrder::lex(ring);
    return IdealFile{Ideal(ring, std::move(gens)), std::move(order)};
}

GroupAction action_from_json(const json& j, RingPtr ring, std::size_t cap) {
    std::vector<SignedSubstitution> gens;
    for (const auto& g : need(j, "generators")) {
        if (!g.is_object())
            throw SchemaError("action generator must be an object of variable images");
        std::vector<SignedSubstitution::Image> images(ring->size());
        std::vector<bool> assigned(ring->size(), false);
        for (const auto& [key, value] : g.items()) {
            auto src = ring->index_of(key);
            if (!src)
                throw SchemaError("action generator names unknown variable '" + key + "'");
            std::string img = need_string(value, "variable image");
            int sign = 1;
            std::string target = img;
            if (!img.empty() && (img[0] == '-' || img[0] == '+')) {
                sign = img[0] == '-' ? -1 : 1;
                target = img.substr(1);
            }
            auto dst = ring->index_of(target);
            if (!dst)
                throw SchemaError("variable image '" + img + "' is not (+/-) a ring variable");
            images[*src] = {*dst, sign};
            assigned[*src] = true;
        }
        for (std::size_t i = 0; i < ring->size(); ++i)
            if (!assigned[i])
                images[i] = {i, 1};
        gens.emplace_back(ring, std::move(images));
    }
    return GroupAction::close(std::move(ring), std::move(gens), cap);
}

GradedDims dims_from_json(const json& j) {
    GradedDims dims(need_int(need(j, "bound"), "bound"));
    for (const auto& [key, value] : need(j, "dims").items())
        dims.set(std::stoi(key), value.get<long>());
    return dims;
}

json dims_to_json(const GradedDims& dims) {
    json entries = json::object();
    for (const auto& [d, v] : dims.nonzero())
        entries[std::to_string(d)] = v;
    return {{"bound", dims.bound()}, {"dims", entries}};
}

builtin::Scenario scenario_from_json(const json& j) {
    builtin::Scenario s;
    s.name = j.contains("name") ? need_string(j.at("name"), "name") : "scenario";
    s.description = j.contains("description") ? need_string(j.at("description"), "description")
                                              : std::string{};

    IdealFile base = ideal_from_json(need(j, "base"));
    s.base = std::make_shared<const BaseRing>(std::move(base.ideal), std::move(base.order));

    const json& fj = need(j, "fiber");
    std::vector<FiberAlgebra::Class> classes;
    for (const auto& c : need(fj, "classes"))
        classes.push_back({need_string(need(c, "label"), "class label"),
                           need_int(need(c, "degree"), "class degree")});
    std::vector<std::string> generators;
    for (const auto& g : need(fj, "generators"))
        generators.push_back(need_string(g, "fiber generator"));
    std::vector<FiberAlgebra::ProductEntry> products;
    if (fj.contains("products")) {
        for (const auto& p : fj.at("products")) {
            FiberAlgebra::ProductEntry entry;
            entry.left = need_string(need(p, "left"), "product left factor");
            entry.right = need_string(need(p, "right"), "product right factor");
            for (const auto& t : need(p, "value"))
                entry.value.push_back({rat_from_string(need_string(need(t, "coeff"), "coeff")),
                                       need_string(need(t, "class"), "class")});
            products.push_back(std::move(entry));
        }
    }
    s.fiber = std::make_shared<const FiberAlgebra>(std::move(classes),
                                                   need_string(need(fj, "unit"), "unit"),
                                                   std::move(generators), products);

    if (j.contains("col_bound"))
        s.col_bound = need_int(j.at("col_bound"), "col_bound");

    if (j.contains("differentials")) {
        for (const auto& d : j.at("differentials")) {
            DifferentialSpec spec;
            spec.page = need_int(need(d, "page"), "page");
            for (const auto& [gen, terms] : need(d, "images").items()) {
                std::vector<DifferentialSpec::Term> value;
                for (const auto& t : terms)
                    value.push_back({Polynomial::parse(need_string(need(t, "base"), "base part"),
                                                       s.base->ring()),
                                     need_string(need(t, "fiber"), "fiber part")});
                spec.images[gen] = std::move(value);
            }
            s.specs.push_back(std::move(spec));
        }
    }
    return s;
}

} // namespace qalg::io
