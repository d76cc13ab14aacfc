// Grid sweeps over (d, p₀, η) with CSV serialization: the data behind the
// advantage/discord curves, plus the inclusive-endpoint range syntax used
// by the command-line flags.

#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qillum/discord.hpp"
#include "qillum/entanglement.hpp"
#include "qillum/illumination.hpp"
#include "qillum/info_measures.hpp"

namespace qillum {

// "start:end:count" with inclusive endpoints; count = 1 collapses to the
// single start value, and a bare number is accepted as shorthand for it.
// Avoids the accumulation drift of step-based float ranges.
struct eta_range {
    double start = 0.0;
    double end = 1.0;
    std::size_t count = 101;

    static eta_range parse(const std::string& text) {
        auto to_double = [](const std::string& tok) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("eta_range: cannot parse '" + tok + "'");
            }
            if (used != tok.size())
                throw std::invalid_argument("eta_range: trailing characters in '" + tok + "'");
            return v;
        };
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            const std::size_t next = text.find(':', pos);
            parts.push_back(text.substr(pos, next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        eta_range r;
        if (parts.size() == 1) {
            r.start = r.end = to_double(parts[0]);
            r.count = 1;
        } else if (parts.size() == 3) {
            r.start = to_double(parts[0]);
            r.end = to_double(parts[1]);
            const long long n = static_cast<long long>(to_double(parts[2]));
            if (n < 1) throw std::invalid_argument("eta_range: count must be at least 1");
            r.count = static_cast<std::size_t>(n);
        } else {
            throw std::invalid_argument("eta_range: expected 'value' or 'start:end:count'");
        }
        if (!(r.start >= 0.0 && r.end <= 1.0 && r.start <= r.end))
            throw std::invalid_argument("eta_range: endpoints must satisfy 0 <= start <= end <= 1");
        return r;
    }

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(count);
        if (count == 1) {
            v.push_back(start);
            return v;
        }
        for (std::size_t i = 0; i < count; ++i)
            v.push_back(i + 1 == count
                            ? end
                            : start + (end - start) * static_cast<double>(i) /
                                          static_cast<double>(count - 1));
        return v;
    }
};

// One grid point; entanglement columns are filled for qubits only (no
// closed-form concurrence beyond d = 2).
struct sweep_record {
    std::size_t d;
    double eta;
    double p0;
    double i_q;
    double i_c_max;
    double delta_i;
    double discord;
    double discord_avg;
    double discord_enc;
    std::optional<double> concurrence;
    std::optional<double> eof;
};

inline sweep_record evaluate_sweep_point(const illumination_config& cfg) {
    sweep_record r{};
    r.d = cfg.d;
    r.eta = cfg.eta;
    r.p0 = cfg.p0;
    r.i_q = quantum_performance(cfg);
    r.i_c_max = conventional_performance(cfg);
    r.delta_i = r.i_q - r.i_c_max;
    const discord_report dr = make_discord_report(cfg);
    r.discord = dr.discord;
    r.discord_avg = dr.discord_avg;
    r.discord_enc = dr.discord_enc;
    if (cfg.d == 2) {
        const entanglement_report er =
            make_entanglement_report(quantum_codewords(cfg).codeword0);
        r.concurrence = er.concurrence;
        r.eof = er.eof;
    }
    return r;
}

// Deterministic (d, p0, eta) ordering. Every record must satisfy the
// advantage/discord equality within tol; a violation is an implementation
// bug, so the sweep aborts instead of emitting inconsistent data.
inline std::vector<sweep_record> run_sweep(const std::vector<std::size_t>& ds,
                                           const std::vector<double>& p0s,
                                           const eta_range& etas, double tol) {
    if (ds.empty() || p0s.empty()) throw std::invalid_argument("run_sweep: empty grid axis");
    if (tol < 0.0) throw std::invalid_argument("run_sweep: tolerance must be non-negative");
    std::vector<sweep_record> out;
    const std::vector<double> eta_values = etas.values();
    out.reserve(ds.size() * p0s.size() * eta_values.size());
    for (std::size_t d : ds)
        for (double p0 : p0s)
            for (double eta : eta_values) {
                sweep_record r = evaluate_sweep_point(illumination_config(d, eta, p0));
                const double gap = std::abs(r.delta_i - r.discord_enc);
                if (gap > tol)
                    throw std::runtime_error(
                        "run_sweep: advantage/discord equality violated at d=" +
                        std::to_string(d) + " eta=" + std::to_string(eta) +
                        " p0=" + std::to_string(p0) + " (gap " + std::to_string(gap) + ")");
                out.push_back(std::move(r));
            }
    return out;
}

namespace detail {

// locale-independent 12-significant-digit formatting
inline std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

}  // namespace detail

// header + one row per record; '.' decimal, ',' delimiter, LF endings
inline void write_sweep_csv(std::ostream& out, const std::vector<sweep_record>& records) {
    out << "d,eta,p0,i_q,i_c_max,delta_i,discord,discord_avg,discord_enc,concurrence,eof\n";
    for (const sweep_record& r : records) {
        out << r.d << ',' << detail::format_real(r.eta) << ',' << detail::format_real(r.p0)
            << ',' << detail::format_real(r.i_q) << ',' << detail::format_real(r.i_c_max) << ','
            << detail::format_real(r.delta_i) << ',' << detail::format_real(r.discord) << ','
            << detail::format_real(r.discord_avg) << ',' << detail::format_real(r.discord_enc)
            << ',' << (r.concurrence ? detail::format_real(*r.concurrence) : std::string())
            << ',' << (r.eof ? detail::format_real(*r.eof) : std::string()) << '\n';
    }
}

}  // namespace qillum
