#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsched/errors.hpp"

namespace qsched {

using pair_key = std::pair<int, int>;

inline pair_key make_pair_key(int i, int j) {
    if (i == j) throw std::invalid_argument("quadratic term requires two distinct variables");
    return i < j ? pair_key{i, j} : pair_key{j, i};
}

// Binary quadratic model over x in {0,1}^n:
//   E(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[{i,j}] x_i x_j
// Quadratic keys are canonical (i < j). Ordered maps keep every iteration
// order, and therefore every downstream artifact, deterministic.
struct QuboModel {
    int num_vars = 0;
    std::map<int, double> linear;
    std::map<pair_key, double> quadratic;
    double offset = 0.0;

    void add_linear(int i, double c) {
        check_var(i);
        if (c != 0.0) linear[i] += c;
    }

    void add_quadratic(int i, int j, double c) {
        check_var(i);
        check_var(j);
        if (c != 0.0) quadratic[make_pair_key(i, j)] += c;
    }

    double energy(const std::vector<std::int8_t>& x) const {
        if (static_cast<int>(x.size()) != num_vars)
            throw std::invalid_argument("configuration length does not match num_vars");
        double e = offset;
        for (const auto& [i, c] : linear)
            if (x[i]) e += c;
        for (const auto& [ij, c] : quadratic)
            if (x[ij.first] && x[ij.second]) e += c;
        return e;
    }

  private:
    void check_var(int i) const {
        if (i < 0 || i >= num_vars) throw std::invalid_argument("variable index out of range");
    }
};

// Ising model over spins s in {-1,+1}^n:
//   E(s) = offset + sum_i h[i] s_i + sum_{i<j} J[{i,j}] s_i s_j
// aux_spin marks the designated auxiliary spin introduced by the linear-term
// elimination (-1 when absent); aux_group_start/size mark the block of spins
// an auxiliary was split into.
struct IsingModel {
    int num_spins = 0;
    std::map<int, double> h;
    std::map<pair_key, double> J;
    double offset = 0.0;
    int aux_spin = -1;
    int aux_group_start = -1;
    int aux_group_size = 0;

    void add_field(int i, double c) {
        check_spin(i);
        if (c != 0.0) h[i] += c;
    }

    void add_coupling(int i, int j, double c) {
        check_spin(i);
        check_spin(j);
        if (c != 0.0) J[make_pair_key(i, j)] += c;
    }

    double energy(const std::vector<std::int8_t>& s) const {
        if (static_cast<int>(s.size()) != num_spins)
            throw std::invalid_argument("configuration length does not match num_spins");
        double e = offset;
        for (const auto& [i, c] : h) e += c * s[i];
        for (const auto& [ij, c] : J) e += c * s[ij.first] * s[ij.second];
        return e;
    }

  private:
    void check_spin(int i) const {
        if (i < 0 || i >= num_spins) throw std::invalid_argument("spin index out of range");
    }
};

// Text serialization. Header line carries the domain tag, the variable count
// and the offset; coefficients are printed with max_digits10 so a parse of
// the emitted text reproduces every double bit for bit.
namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline void write_model(std::ostream& out, const QuboModel& m) {
    out << "qubo " << m.num_vars << ' ' << detail::format_double(m.offset) << '\n';
    for (const auto& [i, c] : m.linear) out << "lin " << i << ' ' << detail::format_double(c) << '\n';
    for (const auto& [ij, c] : m.quadratic)
        out << "quad " << ij.first << ' ' << ij.second << ' ' << detail::format_double(c) << '\n';
}

inline void write_model(std::ostream& out, const IsingModel& m) {
    out << "ising " << m.num_spins << ' ' << detail::format_double(m.offset) << '\n';
    if (m.aux_spin >= 0) out << "aux " << m.aux_spin << '\n';
    if (m.aux_group_size > 0)
        out << "auxgroup " << m.aux_group_start << ' ' << m.aux_group_size << '\n';
    for (const auto& [i, c] : m.h) out << "lin " << i << ' ' << detail::format_double(c) << '\n';
    for (const auto& [ij, c] : m.J)
        out << "quad " << ij.first << ' ' << ij.second << ' ' << detail::format_double(c) << '\n';
}

struct ParsedModel {
    bool is_qubo = false;
    QuboModel qubo;
    IsingModel ising;
};

inline ParsedModel read_model(std::istream& in) {
    ParsedModel out;
    std::string line;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        auto fail = [&](const std::string& why) {
            throw config_error("model line " + std::to_string(lineno) + ": " + why);
        };
        if (!have_header) {
            int n = 0;
            double off = 0.0;
            if ((tag != "qubo" && tag != "ising") || !(ls >> n >> off) || n < 0)
                fail("expected header 'qubo|ising <num_vars> <offset>'");
            out.is_qubo = (tag == "qubo");
            if (out.is_qubo) {
                out.qubo.num_vars = n;
                out.qubo.offset = off;
            } else {
                out.ising.num_spins = n;
                out.ising.offset = off;
            }
            have_header = true;
            continue;
        }
        if (tag == "lin") {
            int i;
            double c;
            if (!(ls >> i >> c)) fail("expected 'lin <i> <c>'");
            if (out.is_qubo)
                out.qubo.add_linear(i, c);
            else
                out.ising.add_field(i, c);
        } else if (tag == "quad") {
            int i, j;
            double c;
            if (!(ls >> i >> j >> c)) fail("expected 'quad <i> <j> <c>'");
            if (out.is_qubo)
                out.qubo.add_quadratic(i, j, c);
            else
                out.ising.add_coupling(i, j, c);
        } else if (tag == "aux" && !out.is_qubo) {
            if (!(ls >> out.ising.aux_spin)) fail("expected 'aux <i>'");
        } else if (tag == "auxgroup" && !out.is_qubo) {
            if (!(ls >> out.ising.aux_group_start >> out.ising.aux_group_size))
                fail("expected 'auxgroup <start> <size>'");
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    if (!have_header) throw config_error("model file has no header line");
    return out;
}

}  // namespace qsched
