// Copyright 2026 The majorana-clifford Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// `majorana` command-line front end. Exit codes: 0 success, 1 invalid input
// or usage, 2 internal failure (including a failed `verify` suite).

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "majorana/design.hpp"
#include "majorana/verify.hpp"

namespace majorana {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;

struct CliConfig {
    std::string subcommand;
    std::string group = "o";
    std::optional<std::size_t> dim;
    std::optional<std::size_t> n;
    std::size_t t = 1;
    std::optional<std::string> index;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint64_t> samples;
    bool exact = false;
    bool parity_restricted = false;
    std::string basis;
    std::size_t tuple = 1;
    bool even_quotient = false;
    std::size_t threads = 1;
    std::string input;  // empty or "-" reads the input stream
    std::vector<std::string> operands;
};

namespace detail {

inline GroupKind parse_group(const std::string &g) {
    if (g == "o") {
        return GroupKind::orthogonal;
    }
    if (g == "sp") {
        return GroupKind::symplectic;
    }
    throw Error(ErrorKind::parse_error, "--group must be 'sp' or 'o'");
}

inline Basis parse_basis(const std::string &b, Basis fallback) {
    if (b.empty()) {
        return fallback;
    }
    if (b == "majorana") {
        return Basis::majorana;
    }
    if (b == "pauli") {
        return Basis::pauli;
    }
    throw Error(ErrorKind::parse_error, "--basis must be 'majorana' or 'pauli'");
}

inline std::size_t resolve_dim(const CliConfig &cfg) {
    if (cfg.dim && cfg.n && *cfg.dim != 2 * *cfg.n) {
        throw Error(ErrorKind::invalid_dimension, "--dim and --n disagree");
    }
    if (cfg.dim) {
        return *cfg.dim;
    }
    if (cfg.n) {
        return 2 * *cfg.n;
    }
    throw Error(ErrorKind::invalid_dimension, "--dim (or --n) is required");
}

inline BigInt parse_index(const std::string &text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorKind::parse_error, "--index must be a positive decimal integer");
    }
    return BigInt(text);
}

/// Runs `body` with the configured input: a file, or `in` for "" and "-".
template <class Body>
auto with_input(const CliConfig &cfg, std::istream &in, Body body) {
    if (cfg.input.empty() || cfg.input == "-") {
        return body(in);
    }
    std::ifstream file(cfg.input);
    if (!file) {
        throw Error(ErrorKind::parse_error, "cannot open input file '" + cfg.input + "'");
    }
    return body(file);
}

/// Strings from positional operands, or one per non-blank input line.
inline std::vector<MajoranaString> read_strings(const CliConfig &cfg, std::istream &in, Basis basis) {
    std::vector<std::string> lines = cfg.operands;
    if (lines.empty()) {
        with_input(cfg, in, [&](std::istream &s) {
            std::string line;
            while (std::getline(s, line)) {
                if (line.find_first_not_of(" \t\r") != std::string::npos) {
                    lines.push_back(line);
                }
            }
            return 0;
        });
    }
    std::vector<MajoranaString> out;
    for (const auto &l : lines) {
        out.push_back(parse_string(l, basis));
    }
    return out;
}

inline int cmd_order(const CliConfig &cfg, std::ostream &out) {
    out << group_order(parse_group(cfg.group), resolve_dim(cfg)) << "\n";
    return kExitOk;
}

inline int cmd_sample(const CliConfig &cfg, std::ostream &out) {
    const GroupKind kind = parse_group(cfg.group);
    const std::size_t dim = resolve_dim(cfg);
    std::optional<BigInt> index;
    if (cfg.index) {
        index = parse_index(*cfg.index);
    }
    if (kind == GroupKind::orthogonal) {
        if (!cfg.basis.empty() && cfg.basis != "majorana") {
            throw Error(ErrorKind::basis_mismatch, "orthogonal samples are Majorana-basis matrices");
        }
        OrthogonalMap s = index ? sample_orthogonal(dim, *index) : sample_orthogonal_random(dim, cfg.seed);
        out << s.matrix().to_string();
    } else {
        SymplecticMap s = index ? sample_symplectic(dim, *index) : sample_symplectic_random(dim, cfg.seed);
        out << s.to_basis(parse_basis(cfg.basis, Basis::pauli)).matrix().to_string();
    }
    return kExitOk;
}

inline int cmd_jw(const CliConfig &cfg, std::istream &in, std::ostream &out) {
    for (const auto &s : read_strings(cfg, in, parse_basis(cfg.basis, Basis::majorana))) {
        out << to_string(jordan_wigner_map(s)) << "\n";
    }
    return kExitOk;
}

inline int cmd_compose(const CliConfig &cfg, std::istream &in, std::ostream &out) {
    auto strings = read_strings(cfg, in, parse_basis(cfg.basis, Basis::majorana));
    if (strings.empty()) {
        throw Error(ErrorKind::parse_error, "compose needs at least one string");
    }
    MajoranaString acc = strings.front();
    for (std::size_t k = 1; k < strings.size(); ++k) {
        acc = compose(acc, strings[k]);
    }
    out << to_string(acc) << "\n";
    return kExitOk;
}

inline int cmd_stab_encode(const CliConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err) {
    StabilizerFile file = with_input(cfg, in, [](std::istream &s) { return parse_stabilizer_file(s); });
    IsotropicSubspace space = validate_generators(file.generators, file.n);
    if (space.contains_all_ones()) {
        space = add_ancilla(space);
        err << "note: generators span j; added one ancilla pair (n=" << space.n() << ")\n";
    }
    EncoderSynthesis enc = stab_clifford_word(space);
    out << enc.map.matrix().to_string() << "\n";
    CliffordWord w;
    w.n = space.n();
    w.gens = enc.word;
    out << to_string(w);
    return kExitOk;
}

inline int cmd_frame(const CliConfig &cfg, std::ostream &out) {
    const GroupKind kind = parse_group(cfg.group);
    const std::size_t dim = resolve_dim(cfg);
    if (cfg.exact && cfg.samples) {
        throw Error(ErrorKind::parse_error, "--exact and --samples are mutually exclusive");
    }
    FrameOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    if (cfg.samples) {
        opt.mode = FrameMode::monte_carlo;
        opt.samples = *cfg.samples;
    }
    FramePotentialReport rep = frame_potential_impl(kind, dim, cfg.t, cfg.parity_restricted, opt);
    out << to_json(rep).dump() << "\n";
    return kExitOk;
}

inline int cmd_orbits(const CliConfig &cfg, std::ostream &out) {
    const GroupKind kind = parse_group(cfg.group);
    const std::size_t dim = resolve_dim(cfg);
    const OrbitSpace space = cfg.even_quotient ? OrbitSpace::even_quotient : OrbitSpace::full;
    OrbitSummary s = orbit_structure(dim, cfg.tuple, kind, space);
    nlohmann::json j;
    j["group"] = group_kind_name(kind);
    j["dim"] = dim;
    j["tuple"] = cfg.tuple;
    j["space"] = cfg.even_quotient ? "even-quotient" : "full";
    j["count"] = s.count;
    j["sizes"] = s.sizes;
    out << j.dump() << "\n";
    return kExitOk;
}

/// With --input or --group: checks each matrix block for group membership.
/// Otherwise runs the dense cross-check suites.
inline int cmd_verify(const CliConfig &cfg, std::istream &in, std::ostream &out, bool membership) {
    if (membership) {
        const GroupKind kind = parse_group(cfg.group);
        const Basis basis = parse_basis(cfg.basis, Basis::pauli);
        const char *label = kind == GroupKind::orthogonal ? "orthogonal" : "symplectic";
        std::size_t blocks = 0, bad = 0;
        with_input(cfg, in, [&](std::istream &s) {
            while (auto m = read_matrix(s)) {
                ++blocks;
                const bool ok = is_member(*m, kind, basis);
                bad += !ok;
                out << (ok ? "" : "not ") << label << "\n";
            }
            return 0;
        });
        if (blocks == 0) {
            throw Error(ErrorKind::parse_error, "no matrix found in input");
        }
        return bad ? kExitInvalid : kExitOk;
    }
    bool all = true;
    for (const auto &r : run_verification_suites()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        all = all && r.passed;
    }
    return all ? kExitOk : kExitInternal;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Majorana Clifford group toolkit", "majorana"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_group = [&](CLI::App *sub) {
        sub->add_option("--group", cfg.group, "group: sp or o")->check(CLI::IsMember({"sp", "o"}));
    };
    auto add_dim = [&](CLI::App *sub) {
        sub->add_option("--dim", cfg.dim, "matrix dimension N");
        sub->add_option("--n", cfg.n, "mode pairs n (N = 2n)");
    };
    auto add_basis = [&](CLI::App *sub) {
        sub->add_option("--basis", cfg.basis, "string basis: majorana or pauli")
            ->check(CLI::IsMember({"majorana", "pauli"}));
    };
    auto add_input = [&](CLI::App *sub) {
        sub->add_option("--input", cfg.input, "input file ('-' for stdin)");
    };
    auto add_seed = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    };

    CLI::App *order = app.add_subcommand("order", "print the group order");
    add_group(order);
    add_dim(order);

    CLI::App *sample = app.add_subcommand("sample", "print one group element (by index, or seeded random)");
    add_group(sample);
    add_dim(sample);
    add_seed(sample);
    add_basis(sample);
    sample->add_option("--index", cfg.index, "1-based element index");

    CLI::App *jw = app.add_subcommand("jw", "Jordan-Wigner transform of strings");
    add_basis(jw);
    add_input(jw);
    jw->add_option("strings", cfg.operands, "strings 'i^<a> <bits>' (default: one per input line)");

    CLI::App *comp = app.add_subcommand("compose", "product of strings, left to right");
    add_basis(comp);
    add_input(comp);
    comp->add_option("strings", cfg.operands, "strings 'i^<a> <bits>' (default: one per input line)");

    CLI::App *enc = app.add_subcommand("stab-encode", "encoder synthesis for a stabilizer file");
    add_input(enc);

    CLI::App *frame = app.add_subcommand("frame", "frame potential report (JSON)");
    add_group(frame);
    add_dim(frame);
    add_seed(frame);
    frame->add_option("--t", cfg.t, "frame potential order")->capture_default_str();
    frame->add_option("--samples", cfg.samples, "Monte Carlo sample count");
    frame->add_flag("--exact", cfg.exact, "exact enumeration (default)");
    frame->add_flag("--parity-restricted", cfg.parity_restricted, "insert the even-parity projector");
    frame->add_option("--threads", cfg.threads, "Monte Carlo worker threads")->capture_default_str();

    CLI::App *orbits = app.add_subcommand("orbits", "orbits on tuples of vectors (JSON)");
    add_group(orbits);
    add_dim(orbits);
    orbits->add_option("--tuple", cfg.tuple, "tuple order k")->capture_default_str();
    orbits->add_flag("--even-quotient", cfg.even_quotient, "act on even vectors modulo j");

    CLI::App *verify = app.add_subcommand("verify", "dense cross-check suites, or matrix membership");
    add_group(verify);
    add_basis(verify);
    add_input(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (cfg.subcommand == "order") {
            return detail::cmd_order(cfg, out);
        }
        if (cfg.subcommand == "sample") {
            return detail::cmd_sample(cfg, out);
        }
        if (cfg.subcommand == "jw") {
            return detail::cmd_jw(cfg, in, out);
        }
        if (cfg.subcommand == "compose") {
            return detail::cmd_compose(cfg, in, out);
        }
        if (cfg.subcommand == "stab-encode") {
            return detail::cmd_stab_encode(cfg, in, out, err);
        }
        if (cfg.subcommand == "frame") {
            return detail::cmd_frame(cfg, out);
        }
        if (cfg.subcommand == "orbits") {
            return detail::cmd_orbits(cfg, out);
        }
        const bool membership = verify->count("--input") > 0 || verify->count("--group") > 0;
        return detail::cmd_verify(cfg, in, out, membership);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace majorana
