#pragma once

// Finite simple group identities and their orders in factored form.

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gk/arith.hpp"

namespace gk {

enum class Family {
    Alt,
    L,       // PSL(n,q)
    U,       // PSU(n,q)
    S,       // PSp(2m,q)
    O,       // Omega(2m+1,q)
    OPlus,   // POmega+(2m,q)
    OMinus,  // POmega-(2m,q)
    G2,
    F4,
    E6,
    TwoE6,
    E7,
    E8,
    ThreeD4,
    TwoB2,
    TwoG2,
    TwoF4,
    Sporadic,
};

// degree carries the printed first parameter: Alt degree n, L/U dimension n,
// S/O/O+/O- the form dimension (2m or 2m+1). q is the field size.
struct GroupId {
    Family family{};
    std::uint64_t degree = 0;
    std::uint64_t q = 0;
    int sporadic = -1;

    friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

namespace detail {

struct SporadicEntry {
    const char* name;
    std::vector<std::pair<std::uint64_t, unsigned>> order;
};

// The 26 sporadic groups plus the Tits group, orders in factored form.
inline const std::vector<SporadicEntry>& sporadic_table() {
    static const std::vector<SporadicEntry> table = {
        {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
        {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
        {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
        {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
        {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
        {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
        {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
        {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
        {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
        {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
        {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
        {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
        {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
        {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
        {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
        {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
        {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
        {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
        {"B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
        {"M", {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
               {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
        {"T", {{2, 11}, {3, 3}, {5, 2}, {13, 1}}},  // Tits group 2F4(2)'
    };
    return table;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// q = p^f with p prime, or nullopt.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_base(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    Factorization f = factor(q);
    if (f.size() != 1) return std::nullopt;
    const auto& [p, e] = *f.entries().begin();
    return std::make_pair(p.get_ui(), e);
}

}  // namespace detail

inline std::string to_string(const GroupId& g) {
    auto two = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(g.degree) + "," + std::to_string(g.q) + ")";
    };
    auto one = [&](const char* name) { return std::string(name) + "(" + std::to_string(g.q) + ")"; };
    switch (g.family) {
        case Family::Alt: return "Alt(" + std::to_string(g.degree) + ")";
        case Family::L: return two("L");
        case Family::U: return two("U");
        case Family::S: return two("S");
        case Family::O: return two("O");
        case Family::OPlus: return two("O+");
        case Family::OMinus: return two("O-");
        case Family::G2: return one("G2");
        case Family::F4: return one("F4");
        case Family::E6: return one("E6");
        case Family::TwoE6: return one("2E6");
        case Family::E7: return one("E7");
        case Family::E8: return one("E8");
        case Family::ThreeD4: return one("3D4");
        case Family::TwoB2: return one("2B2");
        case Family::TwoG2: return one("2G2");
        case Family::TwoF4: return one("2F4");
        case Family::Sporadic: return detail::sporadic_table()[static_cast<std::size_t>(g.sporadic)].name;
    }
    return "?";
}

namespace detail {

[[noreturn]] inline void reject(const std::string& msg) { throw std::invalid_argument(msg); }

inline void validate(const GroupId& g) {
    auto need_prime_power = [&] {
        if (!prime_power_base(g.q))
            reject(to_string(g) + ": field size " + std::to_string(g.q) + " is not a prime power");
    };
    switch (g.family) {
        case Family::Alt:
            if (g.degree < 5) reject("Alt(" + std::to_string(g.degree) + ") is not simple (degree < 5)");
            return;
        case Family::L:
            if (g.degree < 2) reject("L(n,q) requires n >= 2");
            need_prime_power();
            if (g.degree == 2 && g.q == 2) reject("L(2,2) is not simple (isomorphic to Sym(3))");
            if (g.degree == 2 && g.q == 3) reject("L(2,3) is not simple (isomorphic to Alt(4))");
            return;
        case Family::U:
            if (g.degree < 3) reject("U(n,q) requires n >= 3; U(2,q) is L(2,q)");
            need_prime_power();
            if (g.degree == 3 && g.q == 2) reject("U(3,2) is not simple (solvable of order 72)");
            return;
        case Family::S:
            if (g.degree < 4 || g.degree % 2 != 0) reject("S(2m,q) requires even degree >= 4");
            need_prime_power();
            if (g.degree == 4 && g.q == 2) reject("S(4,2) is not simple; its derived subgroup is Alt(6)");
            return;
        case Family::O:
            if (g.degree < 3 || g.degree % 2 == 0) reject("O(2m+1,q) requires odd degree >= 3");
            need_prime_power();
            if (g.degree == 3 && g.q <= 3)
                reject("O(3," + std::to_string(g.q) + ") is isomorphic to L(2," + std::to_string(g.q) +
                       "), which is not simple");
            if (g.degree == 5 && g.q == 2)
                reject("O(5,2) is isomorphic to S(4,2), which is not simple; its derived subgroup is Alt(6)");
            return;
        case Family::OPlus:
            if (g.degree < 4 || g.degree % 2 != 0) reject("O+(2m,q) requires even degree >= 4");
            need_prime_power();
            if (g.degree == 4) reject("O+(4,q) is not simple (a central product of two L(2,q))");
            return;
        case Family::OMinus:
            if (g.degree < 4 || g.degree % 2 != 0) reject("O-(2m,q) requires even degree >= 4");
            need_prime_power();
            return;
        case Family::G2:
            need_prime_power();
            if (g.q == 2) reject("G2(2) is not simple; its derived subgroup is U(3,3)");
            return;
        case Family::F4:
        case Family::E6:
        case Family::TwoE6:
        case Family::E7:
        case Family::E8:
        case Family::ThreeD4:
            need_prime_power();
            return;
        case Family::TwoB2: {
            auto pf = prime_power_base(g.q);
            if (g.q == 2) reject("2B2(2) is not simple (solvable)");
            if (!pf || pf->first != 2 || pf->second % 2 == 0 || pf->second < 3)
                reject("2B2(q) requires q = 2^(2k+1) with k >= 1");
            return;
        }
        case Family::TwoG2: {
            auto pf = prime_power_base(g.q);
            if (g.q == 3) reject("2G2(3) is not simple; its derived subgroup is L(2,8)");
            if (!pf || pf->first != 3 || pf->second % 2 == 0 || pf->second < 3)
                reject("2G2(q) requires q = 3^(2k+1) with k >= 1");
            return;
        }
        case Family::TwoF4: {
            auto pf = prime_power_base(g.q);
            if (g.q == 2) reject("2F4(2) is not simple; its derived subgroup is the Tits group T");
            if (!pf || pf->first != 2 || pf->second % 2 == 0 || pf->second < 3)
                reject("2F4(q) requires q = 2^(2k+1) with k >= 1");
            return;
        }
        case Family::Sporadic:
            if (g.sporadic < 0 || static_cast<std::size_t>(g.sporadic) >= sporadic_table().size())
                reject("unknown sporadic group");
            return;
    }
}

}  // namespace detail

inline GroupId make_group(Family fam, std::uint64_t degree, std::uint64_t q, int sporadic = -1) {
    GroupId g{fam, degree, q, sporadic};
    detail::validate(g);
    return g;
}

inline GroupId sporadic_group(std::string_view name) {
    const auto& table = detail::sporadic_table();
    std::string key = detail::lower(name);
    for (std::size_t i = 0; i < table.size(); ++i)
        if (detail::lower(table[i].name) == key)
            return GroupId{Family::Sporadic, 0, 0, static_cast<int>(i)};
    detail::reject("unknown sporadic group \"" + std::string(name) + "\"");
}

// Canonical representative of the isomorphism class (resolves the classical
// coincidences between members of different families).
inline GroupId canonical(const GroupId& g0) {
    GroupId g = g0;
    for (;;) {
        GroupId next = g;
        switch (g.family) {
            case Family::L:
                if (g.degree == 2 && (g.q == 4 || g.q == 5)) next = GroupId{Family::Alt, 5, 0, -1};
                else if (g.degree == 2 && g.q == 9) next = GroupId{Family::Alt, 6, 0, -1};
                else if (g.degree == 4 && g.q == 2) next = GroupId{Family::Alt, 8, 0, -1};
                else if (g.degree == 3 && g.q == 2) next = GroupId{Family::L, 2, 7, -1};
                break;
            case Family::U:
                if (g.degree == 4 && g.q == 2) next = GroupId{Family::S, 4, 3, -1};
                break;
            case Family::O:
                if (g.degree == 3) next = GroupId{Family::L, 2, g.q, -1};
                else if (g.degree == 5) next = GroupId{Family::S, 4, g.q, -1};
                else if (g.q % 2 == 0) next = GroupId{Family::S, g.degree - 1, g.q, -1};
                break;
            case Family::OPlus:
                if (g.degree == 6) next = GroupId{Family::L, 4, g.q, -1};
                break;
            case Family::OMinus:
                if (g.degree == 6) next = GroupId{Family::U, 4, g.q, -1};
                else if (g.degree == 4) next = GroupId{Family::L, 2, g.q * g.q, -1};
                break;
            default:
                break;
        }
        if (next == g) return g;
        g = next;
    }
}

inline std::optional<std::string> isomorphism_note(const GroupId& g) {
    GroupId c = canonical(g);
    if (c == g) return std::nullopt;
    if (g.family == Family::L && g.degree == 2 && g.q == 4) return "isomorphic to L(2,5) and Alt(5)";
    if (g.family == Family::L && g.degree == 2 && g.q == 5) return "isomorphic to L(2,4) and Alt(5)";
    return "isomorphic to " + to_string(c);
}

// ---------------------------------------------------------------------------
// parsing

inline GroupId parse_group(std::string_view spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) detail::reject("empty group specification");

    auto open = s.find('(');
    if (open == std::string::npos) return sporadic_group(s);

    if (s.back() != ')') detail::reject("expected ')' at end of \"" + std::string(spec) + "\"");
    std::string name = detail::lower(std::string_view(s).substr(0, open));
    std::string args = s.substr(open + 1, s.size() - open - 2);

    std::vector<std::uint64_t> nums;
    std::size_t pos = 0;
    while (pos <= args.size()) {
        auto comma = args.find(',', pos);
        std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            detail::reject("bad numeric argument \"" + tok + "\" in \"" + std::string(spec) + "\"");
        if (tok.size() > 19) detail::reject("argument out of range in \"" + std::string(spec) + "\"");
        nums.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    struct FamilyName {
        std::string_view name;
        Family family;
        int argc;
    };
    static constexpr FamilyName families[] = {
        {"alt", Family::Alt, 1},   {"l", Family::L, 2},        {"u", Family::U, 2},
        {"s", Family::S, 2},       {"o+", Family::OPlus, 2},   {"o-", Family::OMinus, 2},
        {"o", Family::O, 2},       {"g2", Family::G2, 1},      {"f4", Family::F4, 1},
        {"e6", Family::E6, 1},     {"2e6", Family::TwoE6, 1},  {"e7", Family::E7, 1},
        {"e8", Family::E8, 1},     {"3d4", Family::ThreeD4, 1},{"2b2", Family::TwoB2, 1},
        {"2g2", Family::TwoG2, 1}, {"2f4", Family::TwoF4, 1},
    };
    for (const auto& fn : families) {
        if (name != fn.name) continue;
        if (static_cast<int>(nums.size()) != fn.argc)
            detail::reject("\"" + std::string(spec) + "\": expected " + std::to_string(fn.argc) +
                           " argument(s)");
        if (fn.family == Family::Alt) return make_group(Family::Alt, nums[0], 0);
        if (fn.argc == 1) return make_group(fn.family, 0, nums[0]);
        return make_group(fn.family, nums[0], nums[1]);
    }
    detail::reject("unknown group family \"" + std::string(spec) + "\"");
}

// ---------------------------------------------------------------------------
// orders

namespace detail {

struct LieTerm {
    unsigned k;
    bool plus;  // q^k + 1 when set, else q^k - 1
};

struct LieFormula {
    unsigned q_exp = 0;
    std::vector<LieTerm> num;
    std::vector<LieTerm> den;
    unsigned center = 1;
};

inline unsigned gcd4_pow(std::uint64_t q, std::uint64_t m, bool plus) {
    std::uint64_t r = 1, b = q % 4;
    for (std::uint64_t i = 0; i < m; ++i) r = (r * b) % 4;
    std::uint64_t t = plus ? (r + 1) % 4 : (r + 3) % 4;
    if (t == 0) return 4;
    return t == 2 ? 2 : 1;
}

inline LieFormula lie_formula(const GroupId& g) {
    LieFormula f;
    const std::uint64_t q = g.q;
    auto gcd_u = [](std::uint64_t a, std::uint64_t b) {
        while (b) { a %= b; std::swap(a, b); }
        return a;
    };
    switch (g.family) {
        case Family::L: {
            unsigned n = static_cast<unsigned>(g.degree);
            f.q_exp = n * (n - 1) / 2;
            for (unsigned i = 2; i <= n; ++i) f.num.push_back({i, false});
            f.center = static_cast<unsigned>(gcd_u(n, q - 1));
            break;
        }
        case Family::U: {
            unsigned n = static_cast<unsigned>(g.degree);
            f.q_exp = n * (n - 1) / 2;
            for (unsigned i = 2; i <= n; ++i) f.num.push_back({i, i % 2 == 1});
            f.center = static_cast<unsigned>(gcd_u(n, q + 1));
            break;
        }
        case Family::S:
        case Family::O: {
            unsigned m = static_cast<unsigned>(g.family == Family::S ? g.degree / 2 : (g.degree - 1) / 2);
            f.q_exp = m * m;
            for (unsigned i = 1; i <= m; ++i) f.num.push_back({2 * i, false});
            f.center = static_cast<unsigned>(gcd_u(2, q - 1));
            break;
        }
        case Family::OPlus: {
            unsigned m = static_cast<unsigned>(g.degree / 2);
            f.q_exp = m * (m - 1);
            f.num.push_back({m, false});
            for (unsigned i = 1; i < m; ++i) f.num.push_back({2 * i, false});
            f.center = gcd4_pow(q, m, false);
            break;
        }
        case Family::OMinus: {
            unsigned m = static_cast<unsigned>(g.degree / 2);
            f.q_exp = m * (m - 1);
            f.num.push_back({m, true});
            for (unsigned i = 1; i < m; ++i) f.num.push_back({2 * i, false});
            f.center = gcd4_pow(q, m, true);
            break;
        }
        case Family::G2:
            f.q_exp = 6;
            f.num = {{6, false}, {2, false}};
            break;
        case Family::F4:
            f.q_exp = 24;
            f.num = {{12, false}, {8, false}, {6, false}, {2, false}};
            break;
        case Family::E6:
            f.q_exp = 36;
            f.num = {{12, false}, {9, false}, {8, false}, {6, false}, {5, false}, {2, false}};
            f.center = static_cast<unsigned>(gcd_u(3, q - 1));
            break;
        case Family::TwoE6:
            f.q_exp = 36;
            f.num = {{12, false}, {9, true}, {8, false}, {6, false}, {5, true}, {2, false}};
            f.center = static_cast<unsigned>(gcd_u(3, q + 1));
            break;
        case Family::E7:
            f.q_exp = 63;
            f.num = {{18, false}, {14, false}, {12, false}, {10, false}, {8, false}, {6, false}, {2, false}};
            f.center = static_cast<unsigned>(gcd_u(2, q - 1));
            break;
        case Family::E8:
            f.q_exp = 120;
            f.num = {{30, false}, {24, false}, {20, false}, {18, false},
                     {14, false}, {12, false}, {8, false},  {2, false}};
            break;
        case Family::ThreeD4:
            // q^12 (q^8+q^4+1)(q^6-1)(q^2-1), with q^8+q^4+1 = (q^12-1)/(q^4-1)
            f.q_exp = 12;
            f.num = {{12, false}, {6, false}, {2, false}};
            f.den = {{4, false}};
            break;
        case Family::TwoB2:
            f.q_exp = 2;
            f.num = {{2, true}, {1, false}};
            break;
        case Family::TwoG2:
            f.q_exp = 3;
            f.num = {{3, true}, {1, false}};
            break;
        case Family::TwoF4:
            f.q_exp = 12;
            f.num = {{6, true}, {4, false}, {3, true}, {1, false}};
            break;
        default:
            reject("no Lie order formula for " + to_string(g));
    }
    return f;
}

inline Factorization alt_order(std::uint64_t n) {
    if (n > 1'000'000) reject("Alt(n) order: degree too large (limit 10^6)");
    Factorization f;
    for (std::uint32_t p : small_primes()) {
        if (p > n) break;
        std::uint64_t e = 0, pk = p;
        while (pk <= n) {
            e += n / pk;
            if (pk > n / p) break;  // pk * p would overflow past n
            pk *= p;
        }
        if (p == 2) e -= 1;  // the factor 2 lost in passing from Sym to Alt
        if (e > 0) f.multiply_prime(Integer(p), static_cast<unsigned>(e));
    }
    return f;
}

}  // namespace detail

// Exact factored order of the simple group. Each q^k +- 1 term is factored
// separately and the center divisor removed exactly.
inline Factorization order(const GroupId& g) {
    detail::validate(g);
    if (g.family == Family::Alt) return detail::alt_order(g.degree);
    if (g.family == Family::Sporadic) {
        Factorization f;
        for (const auto& [p, e] : detail::sporadic_table()[static_cast<std::size_t>(g.sporadic)].order)
            f.multiply_prime(Integer(static_cast<unsigned long>(p)), e);
        return f;
    }
    auto pf = detail::prime_power_base(g.q);
    const std::uint64_t p = pf->first;
    const unsigned fdeg = pf->second;
    detail::LieFormula formula = detail::lie_formula(g);

    Factorization result;
    result.multiply_prime(Integer(static_cast<unsigned long>(p)), formula.q_exp * fdeg);
    for (const auto& t : formula.num) result *= factor_power_pm1(p, t.k * fdeg, t.plus);
    for (const auto& t : formula.den) result /= factor_power_pm1(p, t.k * fdeg, t.plus);
    if (formula.center > 1) result /= factor(Integer(formula.center));
    return result;
}

// Ascending prime divisors of |g|.
inline std::vector<Integer> pi(const GroupId& g) { return order(g).primes(); }

// |Aut(L):L| for the two target groups only; the catalog does not compute
// outer automorphism groups in general.
inline unsigned out_order(const GroupId& g) {
    if ((g.family == Family::E6 || g.family == Family::TwoE6) && g.q == 3) return 2;
    throw std::invalid_argument("out_order: unsupported group " + to_string(g));
}

}  // namespace gk
