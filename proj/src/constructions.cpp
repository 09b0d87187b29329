#include "diamfam/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "diamfam/bounds.hpp"

namespace diamfam {

namespace {

std::uint64_t elems_to_bits(int n, const std::vector<int>& elems) { return SetMask::of(GroundSize(n), elems).bits(); }

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_distinct_points(int n, std::initializer_list<int> pts, const std::string& what) {
    std::uint64_t seen = 0;
    for (int p : pts) {
        require(1 <= p && p <= n, what + ": point outside [1, n]");
        const std::uint64_t bit = std::uint64_t{1} << (p - 1);
        require((seen & bit) == 0, what + ": points must be distinct");
        seen |= bit;
    }
}

void append_layer(std::vector<std::uint64_t>& out, int n, int k) {
    for (std::uint64_t m : layer_masks(n, k)) out.push_back(m);
}

void append_ball(std::vector<std::uint64_t>& out, int n, int d) {
    for (int i = 0; i <= d; ++i) append_layer(out, n, i);
}

// Members of the k-layer through `required` bits, avoiding `forbidden`,
// meeting `meet` when nonzero.
void append_layer_filtered(std::vector<std::uint64_t>& out, int n, int k, std::uint64_t required,
                           std::uint64_t forbidden, std::uint64_t meet) {
    for (std::uint64_t m : layer_masks(n, k)) {
        if ((m & required) != required) continue;
        if ((m & forbidden) != 0) continue;
        if (meet != 0 && (m & meet) == 0) continue;
        out.push_back(m);
    }
}

}  // namespace

std::vector<std::uint64_t> layer_masks(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) return out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t limit = GroundSize(n).full_bits();
    std::uint64_t v = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
        out.push_back(v);
        // Gosper's hack: next mask with the same popcount.
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        if (r < v || r > limit) break;  // wrapped or walked past the top mask
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

std::string to_string(TemplateKind kind) {
    switch (kind) {
        case TemplateKind::K: return "K";
        case TemplateKind::H: return "H";
        case TemplateKind::Hstar: return "Hstar";
        case TemplateKind::T5: return "T5";
        case TemplateKind::T3: return "T3";
        case TemplateKind::HM: return "HM";
        case TemplateKind::R: return "R";
        case TemplateKind::Rstar: return "Rstar";
        case TemplateKind::Ustar: return "Ustar";
        case TemplateKind::V: return "V";
        case TemplateKind::Q: return "Q";
        case TemplateKind::M: return "M";
        case TemplateKind::Lex: return "Lex";
    }
    throw std::invalid_argument("unknown template kind");
}

std::optional<TemplateKind> template_kind_from_string(const std::string& name) {
    for (TemplateKind k : {TemplateKind::K, TemplateKind::H, TemplateKind::Hstar, TemplateKind::T5,
                           TemplateKind::T3, TemplateKind::HM, TemplateKind::R, TemplateKind::Rstar,
                           TemplateKind::Ustar, TemplateKind::V, TemplateKind::Q, TemplateKind::M,
                           TemplateKind::Lex}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

Template Template::k_family(int n, int s, int y) {
    Template t;
    t.kind = TemplateKind::K;
    t.n = n;
    t.s = s;
    t.y = y;
    return t;
}

Template Template::h_family(int n, int s, std::vector<int> dset, int y) {
    Template t;
    t.kind = TemplateKind::H;
    t.n = n;
    t.s = s;
    const int d = s / 2;
    if (dset.empty()) {
        dset.resize(static_cast<std::size_t>(std::max(0, d + 1)));
        std::iota(dset.begin(), dset.end(), 1);
    }
    t.dset = std::move(dset);
    t.y = (s % 2 != 0 && y == 0) ? d + 2 : y;
    return t;
}

Template Template::h_star(int n, std::vector<int> pair) {
    Template t;
    t.kind = TemplateKind::Hstar;
    t.n = n;
    t.s = 4;
    t.dset = std::move(pair);
    return t;
}

Template Template::t_family5(int n, std::vector<int> triple) {
    Template t;
    t.kind = TemplateKind::T5;
    t.n = n;
    t.s = 5;
    t.dset = std::move(triple);
    return t;
}

Template Template::t_family3(int n, std::vector<int> triple) {
    Template t;
    t.kind = TemplateKind::T3;
    t.n = n;
    t.dset = std::move(triple);
    return t;
}

Template Template::hilton_milner(int n, int k, int center, std::vector<int> base) {
    Template t;
    t.kind = TemplateKind::HM;
    t.n = n;
    t.k = k;
    t.y = center;
    if (base.empty() && k >= 0) {
        base.resize(static_cast<std::size_t>(k));
        std::iota(base.begin(), base.end(), 2);
    }
    t.dset = std::move(base);
    return t;
}

Template Template::r_family(int n, int s, std::vector<int> rset, int y) {
    Template t;
    t.kind = TemplateKind::R;
    t.n = n;
    t.s = s;
    const int d = s / 2;
    if (rset.empty()) {
        rset.resize(static_cast<std::size_t>(std::max(0, d + 2)));
        std::iota(rset.begin(), rset.end(), 1);
    }
    t.dset = std::move(rset);
    t.y = (y == 0) ? t.dset.front() : y;
    return t;
}

Template Template::r_star(int n, int y, std::vector<int> pair) {
    Template t;
    t.kind = TemplateKind::Rstar;
    t.n = n;
    t.s = 4;
    t.y = y;
    t.dset = std::move(pair);
    return t;
}

Template Template::u_star(int n, int y, std::vector<int> pair) {
    Template t = r_star(n, y, std::move(pair));
    t.kind = TemplateKind::Ustar;
    return t;
}

Template Template::v_family(int n, int a, int b, int c) {
    Template t;
    t.kind = TemplateKind::V;
    t.n = n;
    t.s = 2;
    t.dset = {a, b, c};
    return t;
}

Template Template::q_family(int n, int s, int j, int y, std::vector<int> dset) {
    Template t;
    t.kind = TemplateKind::Q;
    t.n = n;
    t.s = s;
    const int d = s / 2;
    t.j = (j == 0) ? 1 : j;
    t.y = (y == 0) ? 2 : y;
    if (dset.empty() && d >= 0) {
        dset.push_back(t.j);
        for (int e = 1; static_cast<int>(dset.size()) < d + 2 && e <= n; ++e) {
            if (e != t.j && e != t.y) dset.push_back(e);
        }
        std::sort(dset.begin(), dset.end());
    }
    t.dset = std::move(dset);
    return t;
}

Template Template::m_family(int n, int j, int y, int x0, int x1) {
    Template t;
    t.kind = TemplateKind::M;
    t.n = n;
    t.s = 3;
    t.j = j;
    t.y = y;
    t.x0 = x0;
    t.x1 = x1;
    return t;
}

Template Template::lex(int n, int k, std::uint64_t m) {
    Template t;
    t.kind = TemplateKind::Lex;
    t.n = n;
    t.k = k;
    t.m = m;
    return t;
}

void Template::validate() const {
    GroundSize ground(n);  // throws outside [1, 64]
    const int d = s / 2;
    const std::string name = to_string(kind);
    switch (kind) {
        case TemplateKind::K:
            require(s >= 0, name + ": requires s >= 0");
            if (s % 2 != 0) require_distinct_points(n, {y}, name + ": y");
            return;
        case TemplateKind::H: {
            require(s >= 2, name + ": requires s >= 2");
            require(static_cast<int>(dset.size()) == d + 1, name + ": |D| must be d+1");
            std::uint64_t bits = elems_to_bits(n, dset);
            require(std::popcount(bits) == d + 1, name + ": D elements must be distinct");
            if (s % 2 != 0) {
                require_distinct_points(n, {y}, name + ": y");
                require(((bits >> (y - 1)) & 1U) == 0, name + ": y must avoid D");
            }
            return;
        }
        case TemplateKind::Hstar:
            require(n >= 3, name + ": requires n >= 3");
            require(dset.size() == 2, name + ": special pair must have two points");
            require_distinct_points(n, {dset[0], dset[1]}, name + ": pair");
            return;
        case TemplateKind::T5:
        case TemplateKind::T3:
            require(n >= 3, name + ": requires n >= 3");
            require(dset.size() == 3, name + ": special triple must have three points");
            require_distinct_points(n, {dset[0], dset[1], dset[2]}, name + ": triple");
            return;
        case TemplateKind::HM: {
            require(k >= 2, name + ": requires k >= 2");
            require(n >= k + 1, name + ": requires n >= k+1");
            require_distinct_points(n, {y}, name + ": center");
            require(static_cast<int>(dset.size()) == k, name + ": base must be a k-set");
            std::uint64_t bits = elems_to_bits(n, dset);
            require(std::popcount(bits) == k, name + ": base elements must be distinct");
            require(((bits >> (y - 1)) & 1U) == 0, name + ": center must avoid the base");
            return;
        }
        case TemplateKind::R: {
            require(s >= 4 && s % 2 == 0, name + ": requires even s with d >= 2");
            require(static_cast<int>(dset.size()) == d + 2, name + ": |R| must be d+2");
            std::uint64_t bits = elems_to_bits(n, dset);
            require(std::popcount(bits) == d + 2, name + ": R elements must be distinct");
            require_distinct_points(n, {y}, name + ": y");
            require(((bits >> (y - 1)) & 1U) != 0, name + ": y must lie in R");
            return;
        }
        case TemplateKind::Rstar:
        case TemplateKind::Ustar: {
            require(n >= 3, name + ": requires n >= 3");
            require(dset.size() == 2, name + ": special pair must have two points");
            require_distinct_points(n, {dset[0], dset[1], y}, name + ": pair and y");
            return;
        }
        case TemplateKind::V:
            require(dset.size() == 3, name + ": requires three points");
            require_distinct_points(n, {dset[0], dset[1], dset[2]}, name + ": points");
            return;
        case TemplateKind::Q: {
            require(s >= 3 && s % 2 != 0, name + ": requires odd s with d >= 1");
            require_distinct_points(n, {j, y}, name + ": j and y");
            require(static_cast<int>(dset.size()) == d + 2, name + ": |D| must be d+2");
            std::uint64_t bits = elems_to_bits(n, dset);
            require(std::popcount(bits) == d + 2, name + ": D elements must be distinct");
            require(((bits >> (j - 1)) & 1U) != 0, name + ": j must lie in D");
            require(((bits >> (y - 1)) & 1U) == 0, name + ": y must avoid D");
            return;
        }
        case TemplateKind::M:
            require_distinct_points(n, {j, y, x0, x1}, name + ": points");
            return;
        case TemplateKind::Lex:
            require(0 <= k && k <= n, name + ": requires 0 <= k <= n");
            require(m <= binomial(n, k), name + ": m exceeds C(n, k)");
            return;
    }
    throw std::invalid_argument("unknown template kind");
}

std::string Template::describe() const {
    std::string out = to_string(kind) + "(n=" + std::to_string(n);
    if (s >= 0 && kind != TemplateKind::T3 && kind != TemplateKind::HM && kind != TemplateKind::Lex) {
        out += ",s=" + std::to_string(s);
    }
    if (k >= 0) out += ",k=" + std::to_string(k);
    if (kind == TemplateKind::Lex) out += ",m=" + std::to_string(m);
    if (!dset.empty()) {
        out += ",D={";
        for (std::size_t i = 0; i < dset.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(dset[i]);
        }
        out += "}";
    }
    if (y != 0) out += ",y=" + std::to_string(y);
    if (j != 0) out += ",j=" + std::to_string(j);
    if (x0 != 0) out += ",x0=" + std::to_string(x0) + ",x1=" + std::to_string(x1);
    out += ")";
    return out;
}

SetFamily build(const Template& t) {
    t.validate();
    const int n = t.n;
    const int d = t.s / 2;
    const bool odd = (t.s % 2) != 0;
    std::vector<std::uint64_t> out;

    const auto bit = [](int e) { return std::uint64_t{1} << (e - 1); };

    switch (t.kind) {
        case TemplateKind::K: {
            append_ball(out, n, d);
            if (odd) append_layer_filtered(out, n, d + 1, bit(t.y), 0, 0);
            break;
        }
        case TemplateKind::H: {
            const std::uint64_t dbits = elems_to_bits(n, t.dset);
            if (!odd) {
                append_ball(out, n, d - 1);
                out.push_back(dbits);
                append_layer_filtered(out, n, d, 0, 0, dbits);
            } else {
                append_ball(out, n, d);
                out.push_back(dbits);
                append_layer_filtered(out, n, d + 1, bit(t.y), 0, dbits);
            }
            break;
        }
        case TemplateKind::Hstar: {
            const std::uint64_t pair = elems_to_bits(n, t.dset);
            append_ball(out, n, 1);
            append_layer_filtered(out, n, 2, 0, 0, pair);
            append_layer_filtered(out, n, 3, pair, 0, 0);
            break;
        }
        case TemplateKind::T5:
        case TemplateKind::T3: {
            const std::uint64_t triple = elems_to_bits(n, t.dset);
            if (t.kind == TemplateKind::T5) append_ball(out, n, 2);
            for (std::uint64_t m : layer_masks(n, 3)) {
                if (std::popcount(m & triple) >= 2) out.push_back(m);
            }
            break;
        }
        case TemplateKind::HM: {
            const std::uint64_t base = elems_to_bits(n, t.dset);
            append_layer_filtered(out, n, t.k, bit(t.y), 0, base);
            out.push_back(base);
            break;
        }
        case TemplateKind::R: {
            const std::uint64_t rbits = elems_to_bits(n, t.dset);
            append_ball(out, n, d - 2);
            out.push_back(rbits);
            for (int sz : {d - 1, d}) {
                append_layer_filtered(out, n, sz, bit(t.y), 0, 0);
                append_layer_filtered(out, n, sz, 0, bit(t.y), rbits);
            }
            break;
        }
        case TemplateKind::Rstar: {
            const std::uint64_t pair = elems_to_bits(n, t.dset);
            const std::uint64_t a = bit(t.dset[0]), b = bit(t.dset[1]), yb = bit(t.y);
            append_ball(out, n, 1);
            out.push_back(a | b);
            out.push_back(a | yb);
            out.push_back(b | yb);
            append_layer_filtered(out, n, 3, yb, 0, pair);
            append_layer_filtered(out, n, 3, pair, 0, 0);
            break;
        }
        case TemplateKind::Ustar: {
            const std::uint64_t pair = elems_to_bits(n, t.dset);
            const std::uint64_t a = bit(t.dset[0]), b = bit(t.dset[1]), yb = bit(t.y);
            out.push_back(0);
            out.push_back(a);
            out.push_back(b);
            out.push_back(yb);
            append_layer_filtered(out, n, 2, yb, 0, 0);
            append_layer_filtered(out, n, 2, 0, yb, pair);
            out.push_back(pair | yb);
            append_layer_filtered(out, n, 4, pair | yb, 0, 0);
            break;
        }
        case TemplateKind::V: {
            out.push_back(bit(t.dset[0]));
            out.push_back(bit(t.dset[1]));
            out.push_back(bit(t.dset[2]));
            out.push_back(elems_to_bits(n, t.dset));
            break;
        }
        case TemplateKind::Q: {
            const std::uint64_t dbits = elems_to_bits(n, t.dset);
            const std::uint64_t jb = bit(t.j), yb = bit(t.y);
            append_ball(out, n, d - 1);
            out.push_back(dbits);
            append_layer_filtered(out, n, d, jb, 0, 0);
            append_layer_filtered(out, n, d, 0, jb, dbits);
            append_layer_filtered(out, n, d + 1, yb | jb, 0, 0);
            append_layer_filtered(out, n, d + 1, yb, jb, dbits);
            break;
        }
        case TemplateKind::M: {
            const std::uint64_t jb = bit(t.j), yb = bit(t.y), x0b = bit(t.x0), x1b = bit(t.x1);
            out = {0, jb, yb, x0b, yb | jb, yb | x1b, jb | x1b, yb | jb | x0b};
            break;
        }
        case TemplateKind::Lex:
            return lex_family(t.n, t.k, t.m);
    }
    return SetFamily::from_masks(GroundSize(n), std::move(out));
}

std::uint64_t expected_size(const Template& t) {
    t.validate();
    const int n = t.n;
    const int d = t.s / 2;
    const bool odd = (t.s % 2) != 0;
    const auto ball = [n](int r) {
        std::uint64_t sum = 0;
        for (int i = 0; i <= r; ++i) sum += binomial(n, i);
        return sum;
    };
    switch (t.kind) {
        case TemplateKind::K:
            return ball(d) + (odd ? binomial(n - 1, d) : 0);
        case TemplateKind::H:
            return odd ? ball(d) + binomial(n - 1, d) - binomial(n - d - 2, d) + 1
                       : ball(d) - binomial(n - d - 1, d) + 1;
        case TemplateKind::Hstar:
        case TemplateKind::Rstar:
        case TemplateKind::Ustar:
            return 4 * static_cast<std::uint64_t>(n) - 4;
        case TemplateKind::T5:
            return ball(2) + 3 * static_cast<std::uint64_t>(n - 3) + 1;
        case TemplateKind::T3:
            return 3 * static_cast<std::uint64_t>(n - 3) + 1;
        case TemplateKind::HM:
            return binomial(n - 1, t.k - 1) - binomial(n - t.k - 1, t.k - 1) + 1;
        case TemplateKind::R:
            return ball(d) - binomial(n - d - 1, d) + 1;
        case TemplateKind::V:
            return 4;
        case TemplateKind::Q:
            return ball(d) + binomial(n - 1, d) - binomial(n - d - 2, d) - binomial(n - d - 3, d) + 1;
        case TemplateKind::M:
            return 8;
        case TemplateKind::Lex:
            return t.m;
    }
    throw std::invalid_argument("unknown template kind");
}

SetFamily lex_family(int n, int k, std::uint64_t m) {
    GroundSize ground(n);
    if (k < 0 || k > n) throw std::invalid_argument("lex family requires 0 <= k <= n");
    if (m > binomial(n, k)) throw std::invalid_argument("lex family prefix length exceeds C(n, k)");
    std::vector<std::uint64_t> out;
    out.reserve(m);
    if (m == 0) return SetFamily::from_masks(ground, {});
    if (k == 0) return SetFamily::from_masks(ground, {0});

    // Ascending element tuples in lexicographic order; the comparator
    // min(F\G) < min(G\F) orders k-sets exactly like their sorted tuples.
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 1);
    while (true) {
        out.push_back(SetMask::of(ground, c).bits());
        if (out.size() == m) break;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j2 = i + 1; j2 < k; ++j2) c[static_cast<std::size_t>(j2)] = c[static_cast<std::size_t>(j2 - 1)] + 1;
    }
    return SetFamily::from_masks(ground, std::move(out));
}

}  // namespace diamfam
