#pragma once

#include <zerosum/io.hpp>
#include <zerosum/verify/statements.hpp>

#include <optional>
#include <string>
#include <vector>

namespace zerosum::verify {

/// Which modulus the Hamidoune-type hypotheses are read in.
enum class Modulus { Order, Exponent };

inline const char* to_string(Modulus m) { return m == Modulus::Order ? "order" : "exponent"; }

inline Modulus parse_modulus(std::string_view s) {
    if (s == "order") return Modulus::Order;
    if (s == "exponent") return Modulus::Exponent;
    fail(ErrorCode::ParseError, "modulus must be 'order' or 'exponent'");
}

/// One point of a statement's domain. Fields a statement does not read stay empty.
struct Instance {
    Group group;
    std::optional<GSequence> S;
    std::optional<WeightSeq> W;
    std::optional<std::int64_t> n;
    std::optional<GSequence> S_prime;
    std::optional<GSet> A;
    std::optional<GSet> B;
    std::optional<Index> a0;
    std::optional<Subgroup> H;
    std::optional<std::int64_t> t;
    std::optional<std::int64_t> h;
    std::optional<std::vector<GSet>> sets;
    Modulus modulus = Modulus::Order;
    // Certificate for THM_SETPART_MAXK.
    std::optional<Subgroup> K;
    std::optional<Index> g_prime;
    std::optional<GSequence> T;
    std::optional<Setpartition> B_blocks;
    std::optional<WeightSeq> B_weights;

    explicit Instance(Group g = Group{}) : group(std::move(g)) {}

    json to_json() const {
        json j;
        j["group"] = group.spec();
        if (S) j["S"] = S->to_string();
        if (W) j["W"] = weights_json(*W);
        if (n) j["n"] = *n;
        if (S_prime) j["S_prime"] = S_prime->to_string();
        if (A) j["A"] = gset_json(*A);
        if (B) j["B"] = gset_json(*B);
        if (a0) j["a0"] = group.format(*a0);
        if (H) j["H"] = gset_json(H->elements);
        if (t) j["t"] = *t;
        if (h) j["h"] = *h;
        if (sets) {
            j["sets"] = json::array();
            for (auto& s : *sets) j["sets"].push_back(gset_json(s));
        }
        if (modulus != Modulus::Order) j["modulus"] = to_string(modulus);
        if (K) j["K"] = gset_json(K->elements);
        if (g_prime) j["g_prime"] = group.format(*g_prime);
        if (T) j["T"] = T->to_string();
        if (B_blocks) j["B_blocks"] = setpartition_json(*B_blocks);
        if (B_weights) j["B_weights"] = weights_json(*B_weights);
        return j;
    }

    static Instance from_json(const json& j) {
        Instance in(parse_group(j.at("group").get<std::string>()));
        const Group& g = in.group;
        auto elt = [&](const json& e) {
            return g.parse_element(e.is_string() ? e.get<std::string>() : std::to_string(e.get<std::int64_t>()));
        };
        if (j.contains("S")) in.S = sequence_from_json(g, j["S"]);
        if (j.contains("W")) in.W = weights_from_json(g, j["W"]);
        if (j.contains("n")) in.n = j["n"].get<std::int64_t>();
        if (j.contains("S_prime")) in.S_prime = sequence_from_json(g, j["S_prime"]);
        if (j.contains("A")) in.A = gset_from_json(g, j["A"]);
        if (j.contains("B")) in.B = gset_from_json(g, j["B"]);
        if (j.contains("a0")) in.a0 = elt(j["a0"]);
        if (j.contains("H")) in.H = subgroup_from_json(g, j["H"]);
        if (j.contains("t")) in.t = j["t"].get<std::int64_t>();
        if (j.contains("h")) in.h = j["h"].get<std::int64_t>();
        if (j.contains("sets")) {
            in.sets.emplace();
            for (auto& s : j["sets"]) in.sets->push_back(gset_from_json(g, s));
        }
        if (j.contains("modulus")) in.modulus = parse_modulus(j["modulus"].get<std::string>());
        if (j.contains("K")) in.K = subgroup_from_json(g, j["K"]);
        if (j.contains("g_prime")) in.g_prime = elt(j["g_prime"]);
        if (j.contains("T")) in.T = sequence_from_json(g, j["T"]);
        if (j.contains("B_blocks")) in.B_blocks = setpartition_from_json(g, j["B_blocks"]);
        if (j.contains("B_weights")) in.B_weights = weights_from_json(g, j["B_weights"]);
        return in;
    }
};

template <typename T>
const T& require(const std::optional<T>& field, const char* what) {
    if (!field) fail(ErrorCode::MissingField, std::string("instance field '") + what + "' is required");
    return *field;
}

/// EX1 data: G = Z/p with p = 3 mod 4.
inline Instance example1_instance(std::int64_t p) {
    Instance in(make_group({p}));
    const std::int64_t k = (p - 1) / 2;
    std::vector<std::int64_t> w;
    for (std::int64_t i = 0; i < (k - 1) / 2; ++i) w.push_back(1);
    for (std::int64_t i = 0; i < (k - 1) / 2; ++i) w.push_back(-1);
    w.push_back(0);
    in.W = WeightSeq(in.group, w);
    in.S = GSequence(in.group);
    for (Index g = 0; g < 3; ++g) in.S->add(g % in.group.order(), k);
    return in;
}

/// EX2 data: G = Z/m with m = 2^r.
inline Instance example2_instance(int r) {
    const std::int64_t m = std::int64_t{1} << r;
    Instance in(make_group({m}));
    const std::int64_t k = m - 1;
    std::vector<std::int64_t> w;
    for (std::int64_t i = 0; i < (k - 1) / 2; ++i) w.push_back(1);
    for (std::int64_t i = 0; i < (k - 1) / 2; ++i) w.push_back(-1);
    w.push_back(0);
    in.W = WeightSeq(in.group, w);
    in.S = GSequence(in.group);
    in.S->add(0, k);
    in.S->add(1, k);
    return in;
}

}  // namespace zerosum::verify
