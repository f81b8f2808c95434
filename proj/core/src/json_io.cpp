#include "trapcong/json_io.hpp"

namespace trapcong {

json int_json(const Int& n) { return n.get_str(); }

void to_json(json& j, const Rat& q) { j = q.str(); }

void to_json(json& j, const TrapezoidI& t) {
    j = json{{"a", t.a.get_str()}, {"b", t.b.get_str()}, {"c", t.c.get_str()}, {"d", t.d.get_str()}};
}

void to_json(json& j, const TrapezoidK& t) {
    j = json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}, {"k", t.k.get_str()}};
}

void to_json(json& j, const TrapezoidD& t) {
    j = json{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}};
}

void to_json(json& j, const RightTriangleQ& t) {
    j = json{{"a", t.a}, {"b", t.b}, {"c", t.c}};
}

void to_json(json& j, const CurveQ& E) { j = json{{"A", E.A}, {"B", E.B}}; }

void to_json(json& j, const PointQ& P) {
    if (P.is_infinity())
        j = json{{"infinity", true}};
    else
        j = json{{"x", P.x()}, {"y", P.y()}};
}

void to_json(json& j, const QuarticRow& r) {
    j = json{{"n", r.n.get_str()},
             {"k", r.k.get_str()},
             {"alpha", r.alpha.get_str()},
             {"beta", r.beta.get_str()}};
}

void to_json(json& j, const D0Entry& e) {
    j = json{{"n", e.n},     {"s", e.s},         {"t", e.t},
             {"leg_a", e.leg_a}, {"leg_b", e.leg_b}, {"hyp", e.hyp}};
}

void to_json(json& j, const IForm& f) { j = f.str(); }

json d_witness_record(const Int& n, const TrapezoidD& t, const std::string& source) {
    return json{{"n", n.get_str()}, {"d", t.d}, {"a", t.a}, {"b", t.b}, {"c", t.c},
                {"source", source}};
}

void to_json(json& j, const DSearchEntry& e) {
    if (e.witness) {
        j = d_witness_record(e.n, *e.witness, e.source);
    } else {
        j = json{{"n", e.n.get_str()}, {"d", e.d.get_str()}, {"source", e.source}};
    }
}

void to_json(json& j, const Prop11Certificate& c) {
    j = json::object();
    j["congruent"] = c.congruent();
    if (c.odd_prime)
        j["odd_prime"] = json{{"p", c.odd_prime->first.get_str()},
                              {"k", c.odd_prime->second.get_str()}};
    if (c.two_power)
        j["two_power"] = json{{"i", c.two_power->first},
                              {"k", c.two_power->second.get_str()}};
}

}  // namespace trapcong
