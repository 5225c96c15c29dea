#include "ctk/gfsparity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ctk::gfs {

unsigned Group2t::t() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

unsigned Group2t::c() const {
    if (exponents.empty()) throw std::invalid_argument("Group2t: no factors");
    return *std::max_element(exponents.begin(), exponents.end());
}

std::uint32_t Group2t::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    unsigned shift = 0;
    for (unsigned e : exponents) {
        std::uint32_t mask = (std::uint32_t(1) << e) - 1;
        out |= (((a >> shift) + (b >> shift)) & mask) << shift;
        shift += e;
    }
    return out;
}

unsigned Group2t::ord_log2(std::uint32_t x) const {
    unsigned best = 0, shift = 0;
    for (unsigned e : exponents) {
        std::uint32_t comp = (x >> shift) & ((std::uint32_t(1) << e) - 1);
        if (comp != 0) best = std::max(best, e - unsigned(std::countr_zero(comp)));
        shift += e;
    }
    return best;
}

Group2t Group2t::parse(const std::string& name) {
    Group2t g;
    std::size_t pos = 0;
    while (pos < name.size()) {
        std::size_t next = name.find('x', pos);
        std::string part = name.substr(pos, next == std::string::npos ? next : next - pos);
        unsigned order = 0, power = 1;
        if (auto caret = part.find('^'); caret != std::string::npos) {
            power = unsigned(std::stoul(part.substr(caret + 1)));
            part = part.substr(0, caret);
        }
        if (part.size() > 1 && (part[0] == 'z' || part[0] == 'Z'))
            order = unsigned(std::stoul(part.substr(1)));
        else if (part.size() > 2 && (part.rfind("gf", 0) == 0 || part.rfind("GF", 0) == 0)) {
            // additive group of GF(2^e) is Z_2^e
            unsigned q = unsigned(std::stoul(part.substr(2)));
            if (q < 2 || (q & (q - 1)) != 0) throw std::invalid_argument("Group2t: bad field order");
            power *= unsigned(std::countr_zero(q));
            order = 2;
        } else {
            throw std::invalid_argument("Group2t: cannot parse '" + part + "'");
        }
        if (order < 2 || (order & (order - 1)) != 0)
            throw std::invalid_argument("Group2t: factor order must be a power of two >= 2");
        for (unsigned i = 0; i < power; ++i)
            g.exponents.push_back(unsigned(std::countr_zero(order)));
        pos = next == std::string::npos ? name.size() : next + 1;
    }
    if (g.exponents.empty()) throw std::invalid_argument("Group2t: empty spec");
    if (g.t() > 24) throw std::invalid_argument("Group2t: too large");
    return g;
}

std::string Group2t::name() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) out << 'x';
        out << 'z' << (1u << exponents[i]);
    }
    return out.str();
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::NLFSR: return "nlfsr";
        case Variant::GFS2: return "gfs2";
        case Variant::TH: return "th";
    }
    throw std::logic_error("variant_name");
}

Variant parse_variant(const std::string& name) {
    if (name == "nlfsr") return Variant::NLFSR;
    if (name == "gfs2") return Variant::GFS2;
    if (name == "th") return Variant::TH;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

unsigned GfsSpec::ell() const {
    if (m < 2 || (m & (m - 1)) != 0) throw std::invalid_argument("GfsSpec: m must be a power of two >= 2");
    return unsigned(std::countr_zero(m));
}

void GfsSpec::validate(const Group2t& g) const {
    unsigned l = ell();
    std::size_t tables = 0, domain = 0, keys = 0;
    switch (variant) {
        case Variant::NLFSR:
            tables = 1;
            domain = std::size_t(1) << (std::size_t(g.t()) * (m - 1));
            keys = 1;
            break;
        case Variant::GFS2:
            if (l < 2) throw std::invalid_argument("GfsSpec: GFS2 needs ell >= 2");
            tables = m / 2;
            domain = g.size();
            keys = m / 2;
            break;
        case Variant::TH:
            if (l < 2) throw std::invalid_argument("GfsSpec: TH needs ell >= 2");
            tables = m - 1;
            domain = g.size();
            keys = m - 1;
            break;
    }
    if (h.size() != tables || k.size() != keys)
        throw std::invalid_argument("GfsSpec: wrong table or key count");
    for (const auto& table : h) {
        if (table.size() != domain) throw std::invalid_argument("GfsSpec: wrong table domain");
        for (auto v : table)
            if (v >= g.size()) throw std::invalid_argument("GfsSpec: table value out of range");
    }
    for (auto v : k)
        if (v >= g.size()) throw std::invalid_argument("GfsSpec: key out of range");
}

GfsSpec random_spec(Variant variant, unsigned m, const Group2t& g,
                    std::uint64_t h_seed, std::uint64_t k_seed) {
    GfsSpec spec;
    spec.variant = variant;
    spec.m = m;
    std::size_t tables, domain, keys;
    if (variant == Variant::NLFSR) {
        tables = 1;
        domain = std::size_t(1) << (std::size_t(g.t()) * (m - 1));
        keys = 1;
    } else {
        tables = variant == Variant::GFS2 ? m / 2 : m - 1;
        domain = g.size();
        keys = tables;
    }
    std::mt19937_64 hr(h_seed), kr(k_seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, g.size() - 1);
    spec.h.assign(tables, {});
    for (auto& table : spec.h) {
        table.resize(domain);
        for (auto& v : table) v = dist(hr);
    }
    spec.k.resize(keys);
    for (auto& v : spec.k) v = dist(kr);
    spec.validate(g);
    return spec;
}

Permutation build_permutation(const GfsSpec& spec, const Group2t& g) {
    spec.validate(g);
    const unsigned t = g.t();
    const unsigned m = spec.m;
    if (std::size_t(t) * m > 20) throw std::invalid_argument("build_permutation: t*m > 20");
    const std::uint32_t block_mask = g.size() - 1;
    const std::size_t points = std::size_t(1) << (std::size_t(t) * m);

    std::vector<std::uint32_t> map(points);
    std::vector<std::uint32_t> a(m);
    for (std::size_t x = 0; x < points; ++x) {
        for (unsigned i = 0; i < m; ++i) a[i] = std::uint32_t(x >> (t * i)) & block_mask;
        std::uint32_t y[32];
        switch (spec.variant) {
            case Variant::NLFSR: {
                std::size_t idx = 0;  // h input (alpha_2..alpha_m), alpha_2 low
                for (unsigned i = 1; i < m; ++i) idx |= std::size_t(a[i]) << (t * (i - 1));
                for (unsigned i = 0; i + 1 < m; ++i) y[i] = a[i + 1];
                y[m - 1] = g.add(g.add(a[0], spec.h[0][idx]), spec.k[0]);
                break;
            }
            case Variant::GFS2: {
                for (unsigned p = 1; p < m; ++p) {
                    if (p & 1) {  // p = 2i-1: alpha_{2i} + h_i(alpha_{2i-1}) + k_i
                        unsigned i = (p + 1) / 2;
                        y[p - 1] = g.add(g.add(a[p], spec.h[i - 1][a[p - 1]]), spec.k[i - 1]);
                    } else {
                        y[p - 1] = a[p];
                    }
                }
                y[m - 1] = a[0];
                break;
            }
            case Variant::TH: {
                for (unsigned p = 1; p < m; ++p)
                    y[p - 1] = g.add(g.add(a[p], spec.h[p - 1][a[0]]), spec.k[p - 1]);
                y[m - 1] = a[0];
                break;
            }
        }
        std::uint32_t packed = 0;
        for (unsigned i = 0; i < m; ++i) packed |= y[i] << (t * i);
        map[x] = packed;
    }
    return Permutation(std::move(map));  // ctor verifies bijectivity
}

int sign_bruteforce(const GfsSpec& spec, const Group2t& g) {
    return build_permutation(spec, g).sign();
}

SignReport sign_formula(const GfsSpec& spec, const Group2t& g) {
    spec.validate(g);
    SignReport rep;
    rep.t = g.t();
    rep.c = g.c();
    rep.ell = spec.ell();

    if (spec.variant != Variant::NLFSR) {
        if (rep.t >= 2) {
            rep.sign = +1;
            rep.fired_case = "t >= 2";
            return rep;
        }
        rep.in_scope = false;
        rep.fired_case = "outside theorem scope (t = 1)";
        if (std::size_t(rep.t) * spec.m <= 20) {
            rep.sign = sign_bruteforce(spec, g);
            rep.used_bruteforce = true;
        }
        return rep;
    }

    // r_i = #{beta : ord(h(beta)) = 2^i}
    rep.r.assign(rep.c + 1, 0);
    for (auto v : spec.h[0]) ++rep.r[g.ord_log2(v)];
    std::uint64_t rc = rep.r[rep.c];

    if (rep.c < rep.t) {
        rep.sign = +1;
        rep.fired_case = "c < t";
    } else if (rep.ell == 1 && rep.t == 1) {  // here c = t = 1
        rep.sign = (rc % 2 == 1) ? +1 : -1;
        rep.fired_case = rc % 2 ? "l = t = c = 1, r_c odd" : "l = t = c = 1, r_c even";
    } else {  // t = c, l*t >= 2
        rep.sign = (rc % 2 == 0) ? +1 : -1;
        rep.fired_case = rc % 2 ? "t = c, r_c odd, l*t >= 2" : "t = c, r_c even, l*t >= 2";
    }
    return rep;
}

RhoReport tau_rho(unsigned t, unsigned ell) {
    if (std::size_t(t) << ell > 24) throw std::invalid_argument("tau_rho: t*2^ell > 24");
    RhoReport rep;
    rep.cycles_of_length.assign(ell + 1, 0);
    rep.cycles_of_length[0] = std::uint64_t(1) << t;
    for (unsigned j = 1; j <= ell; ++j) {
        std::uint64_t half = std::uint64_t(t) << (j - 1);  // t * 2^{j-1}
        rep.cycles_of_length[j] = (std::uint64_t(1) << (2 * half - j)) - (std::uint64_t(1) << (half - j));
        rep.tau += (std::uint64_t(1) << (half - j)) * ((std::uint64_t(1) << j) - 1) *
                   ((std::uint64_t(1) << half) - 1);
    }
    return rep;
}

}  // namespace ctk::gfs
