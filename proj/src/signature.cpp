#include "strata/signature.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace strata {

std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::NotOneDimensional: return "not-one-dimensional";
    }
    return "?";
}

std::vector<int> RamificationProfile::fixed_poles() const {
    std::vector<int> fixed;
    for (int j = 1; j <= static_cast<int>(image.size()); ++j)
        if (apply(j) == j) fixed.push_back(j);
    return fixed;
}

void validate(const Signature& sig) {
    if (sig.genus < 0) throw ValidationError("genus must be non-negative");
    if (sig.zeros.empty()) throw ValidationError("signature needs at least one zero");
    for (int a : sig.zeros)
        if (a < 0) throw ValidationError("zero orders must be non-negative");
    for (int b : sig.poles)
        if (b < 1) throw ValidationError("pole orders must be positive");

    long degree = 0;
    for (int a : sig.zeros) degree += a;
    for (int b : sig.poles) degree -= b;
    if (degree != 2L * sig.genus - 2)
        throw ValidationError("degree mismatch: sum(a) - sum(b) = " + std::to_string(degree) +
                              " but 2g-2 = " + std::to_string(2 * sig.genus - 2));

    std::vector<char> seen(static_cast<size_t>(sig.n()), 0);
    for (const auto& block : sig.blocks) {
        if (block.empty()) throw ValidationError("empty residue block");
        for (int j : block) {
            if (j < 1 || j > sig.n()) throw ValidationError("residue block references pole " + std::to_string(j));
            if (seen[static_cast<size_t>(j) - 1]) throw ValidationError("pole " + std::to_string(j) + " appears in two blocks");
            seen[static_cast<size_t>(j) - 1] = 1;
        }
        // A block consisting of a single simple pole is inadmissible: its
        // residue is forced to vanish by the block but a simple pole always
        // has nonzero residue.
        if (block.size() == 1 && sig.pole_order(block[0]) == 1)
            throw ValidationError("a singleton block may not contain a simple pole");
    }
    for (char c : seen)
        if (!c) throw ValidationError("residue partition does not cover all poles");
}

namespace {

// Splits on a delimiter, trimming whitespace; empty pieces are errors.
std::vector<std::string> split(const std::string& text, char delim) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, delim)) out.push_back(piece);
    if (!text.empty() && text.back() == delim) out.push_back("");
    return out;
}

int parse_int(const std::string& raw, const char* what) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError(std::string("empty ") + what);
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("bad integer '") + raw + "' in " + what);
    }
    if (pos != s.size()) throw ParseError(std::string("bad integer '") + raw + "' in " + what);
    return value;
}

} // namespace

Signature parse_signature(const std::string& text) {
    std::string body = text;
    Signature sig;

    // Optional "g=<int>;" prefix.
    auto semi = body.find(';');
    if (semi != std::string::npos) {
        std::string head = body.substr(0, semi);
        auto eq = head.find('=');
        std::string key = eq == std::string::npos ? head : head.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        if (key != "g" || eq == std::string::npos)
            throw ParseError("expected 'g=<int>;' prefix before ';'");
        sig.genus = parse_int(head.substr(eq + 1), "genus");
        body = body.substr(semi + 1);
    }

    auto parts = split(body, '|');
    if (parts.size() < 2) throw ParseError("signature needs zeros and at least one pole block");

    for (const auto& z : split(parts[0], ','))
        sig.zeros.push_back(parse_int(z, "zero order"));
    for (int a : sig.zeros)
        if (a < 0) throw ParseError("zero orders must be non-negative");

    for (size_t k = 1; k < parts.size(); ++k) {
        std::vector<int> block;
        for (const auto& p : split(parts[k], ',')) {
            int coeff = parse_int(p, "pole order");
            if (coeff >= 0) throw ParseError("pole entries must be negative integers");
            sig.poles.push_back(-coeff);
            block.push_back(sig.n());
        }
        sig.blocks.push_back(std::move(block));
    }

    validate(sig);
    return sig;
}

std::string render(const Signature& sig) {
    std::ostringstream out;
    if (sig.genus != 0) out << "g=" << sig.genus << "; ";
    for (int i = 0; i < sig.m(); ++i) out << (i ? "," : "") << sig.zeros[static_cast<size_t>(i)];
    for (const auto& block : sig.blocks) {
        out << " |";
        for (size_t i = 0; i < block.size(); ++i)
            out << (i ? "," : " ") << -sig.pole_order(block[i]);
    }
    return out.str();
}

int dimension(const Signature& sig) {
    return 2 * sig.genus + sig.m() + sig.n() - sig.r() - 2;
}

Family classify_one_dim(const Signature& sig) {
    if (dimension(sig) != 1) return Family::NotOneDimensional;

    std::vector<int> sizes;
    for (const auto& block : sig.blocks) sizes.push_back(static_cast<int>(block.size()));
    std::sort(sizes.begin(), sizes.end());

    auto all_singletons = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; });

    if (sig.genus == 0) {
        if (sig.m() == 3 && all_singletons) return Family::A;
        if (sig.m() == 2 && sizes.size() >= 1) {
            int pairs = static_cast<int>(std::count(sizes.begin(), sizes.end(), 2));
            if (pairs == 1 && std::count(sizes.begin(), sizes.end(), 1) == static_cast<int>(sizes.size()) - 1)
                return Family::B;
        }
        if (sig.m() == 1) {
            int pairs = static_cast<int>(std::count(sizes.begin(), sizes.end(), 2));
            int triples = static_cast<int>(std::count(sizes.begin(), sizes.end(), 3));
            int singles = static_cast<int>(std::count(sizes.begin(), sizes.end(), 1));
            if (triples == 1 && pairs == 0 && singles == static_cast<int>(sizes.size()) - 1)
                return Family::C;
            if (pairs == 2 && triples == 0 && singles == static_cast<int>(sizes.size()) - 2)
                return Family::D;
        }
    } else if (sig.genus == 1) {
        if (sig.m() == 1 && all_singletons) return Family::E;
    }
    return Family::NotOneDimensional;
}

std::vector<RamificationProfile> ramification_profiles(const Signature& sig) {
    std::vector<RamificationProfile> out;

    int max_fixed;
    if (sig.m() == 1) {
        max_fixed = 2 * sig.genus + 1;
    } else if (sig.m() == 2 && sig.zeros[0] == sig.zeros[1]) {
        max_fixed = 2 * sig.genus + 2;
    } else {
        return out; // profiles require a unique zero or two equal zeros
    }

    // Block lookup: block_of[j-1] = index of the block containing pole j.
    std::vector<int> block_of(static_cast<size_t>(sig.n()), -1);
    for (size_t bi = 0; bi < sig.blocks.size(); ++bi)
        for (int j : sig.blocks[bi]) block_of[static_cast<size_t>(j) - 1] = static_cast<int>(bi);

    auto singleton = [&](int j) {
        return sig.blocks[static_cast<size_t>(block_of[static_cast<size_t>(j) - 1])].size() == 1;
    };
    auto same_pair_block = [&](int j, int k) {
        int bj = block_of[static_cast<size_t>(j) - 1];
        return bj == block_of[static_cast<size_t>(k) - 1] && sig.blocks[static_cast<size_t>(bj)].size() == 2;
    };

    // Backtracking over involutions on pole labels 1..n.
    std::vector<int> image(static_cast<size_t>(sig.n()), 0);
    auto rec = [&](auto&& self, int j, int fixed) -> void {
        if (j > sig.n()) {
            out.push_back(RamificationProfile{image});
            return;
        }
        if (image[static_cast<size_t>(j) - 1] != 0) { // already matched by a smaller label
            self(self, j + 1, fixed);
            return;
        }
        // Fix j.
        if (sig.pole_order(j) % 2 == 0 && fixed < max_fixed && singleton(j)) {
            image[static_cast<size_t>(j) - 1] = j;
            self(self, j + 1, fixed + 1);
            image[static_cast<size_t>(j) - 1] = 0;
        }
        // Swap j with a larger unmatched label of the same order.
        for (int k = j + 1; k <= sig.n(); ++k) {
            if (image[static_cast<size_t>(k) - 1] != 0) continue;
            if (sig.pole_order(k) != sig.pole_order(j)) continue;
            if (!(same_pair_block(j, k) || (singleton(j) && singleton(k)))) continue;
            image[static_cast<size_t>(j) - 1] = k;
            image[static_cast<size_t>(k) - 1] = j;
            self(self, j + 1, fixed);
            image[static_cast<size_t>(j) - 1] = 0;
            image[static_cast<size_t>(k) - 1] = 0;
        }
    };
    rec(rec, 1, 0);
    return out;
}

namespace {

// Collects singleton-block pole orders and labels in label order.
void collect_singletons(const Signature& sig, std::vector<int>& b, std::vector<int>& labels) {
    std::vector<int> single_labels;
    for (const auto& block : sig.blocks)
        if (block.size() == 1) single_labels.push_back(block[0]);
    std::sort(single_labels.begin(), single_labels.end());
    for (int j : single_labels) {
        labels.push_back(j);
        b.push_back(sig.pole_order(j));
    }
}

// Returns the pair block's labels ordered so that the orders are ascending
// (ties broken by label).
std::pair<int, int> ordered_pair(const Signature& sig, const std::vector<int>& block) {
    int x = block[0], y = block[1];
    if (sig.pole_order(x) > sig.pole_order(y) ||
        (sig.pole_order(x) == sig.pole_order(y) && x > y))
        std::swap(x, y);
    return {x, y};
}

} // namespace

BView b_view(const Signature& sig) {
    if (classify_one_dim(sig) != Family::B) throw UnsupportedFamilyError("not a B-signature");
    BView v;
    v.a1 = sig.zeros[0];
    v.a2 = sig.zeros[1];
    for (const auto& block : sig.blocks)
        if (block.size() == 2) {
            auto [x, y] = ordered_pair(sig, block);
            v.q1 = x;
            v.q2 = y;
            v.e1 = sig.pole_order(x);
            v.e2 = sig.pole_order(y);
        }
    collect_singletons(sig, v.b, v.labels);
    return v;
}

CView c_view(const Signature& sig) {
    if (classify_one_dim(sig) != Family::C) throw UnsupportedFamilyError("not a C-signature");
    CView v;
    v.a = sig.zeros[0];
    for (const auto& block : sig.blocks)
        if (block.size() == 3) {
            std::vector<int> triple = block;
            std::sort(triple.begin(), triple.end(), [&](int x, int y) {
                return std::make_pair(sig.pole_order(x), x) < std::make_pair(sig.pole_order(y), y);
            });
            for (int i = 0; i < 3; ++i) {
                v.q[i] = triple[static_cast<size_t>(i)];
                v.e[i] = sig.pole_order(triple[static_cast<size_t>(i)]);
            }
        }
    collect_singletons(sig, v.b, v.labels);
    return v;
}

DView d_view(const Signature& sig) {
    if (classify_one_dim(sig) != Family::D) throw UnsupportedFamilyError("not a D-signature");
    DView v;
    v.a = sig.zeros[0];
    std::vector<std::pair<int, int>> pairs; // ordered (lower, higher) per block
    for (const auto& block : sig.blocks)
        if (block.size() == 2) pairs.push_back(ordered_pair(sig, block));
    // Normalization: a simple pair (orders (1,1)) is (e1,e2) whenever exactly
    // one of the two blocks is simple; otherwise keep label order of the
    // blocks (ties are symmetric).
    auto is_simple = [&](const std::pair<int, int>& p) {
        return sig.pole_order(p.first) == 1 && sig.pole_order(p.second) == 1;
    };
    if (!is_simple(pairs[0]) && is_simple(pairs[1])) std::swap(pairs[0], pairs[1]);
    v.q[0] = pairs[0].first;
    v.q[1] = pairs[0].second;
    v.q[2] = pairs[1].first;
    v.q[3] = pairs[1].second;
    for (int i = 0; i < 4; ++i) v.e[i] = sig.pole_order(v.q[i]);
    collect_singletons(sig, v.b, v.labels);
    return v;
}

AView a_view(const Signature& sig) {
    if (classify_one_dim(sig) != Family::A) throw UnsupportedFamilyError("not an A-signature");
    AView v;
    for (int i = 0; i < 3; ++i) v.a[i] = sig.zeros[static_cast<size_t>(i)];
    collect_singletons(sig, v.b, v.labels);
    return v;
}

} // namespace strata
