// Copyright 2026 The hdfusion Authors
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
#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hdfusion/edc.hpp"
#include "hdfusion/json_io.hpp"
#include "hdfusion/protocols.hpp"

namespace hdfusion::cli {

namespace {

// Flags each protocol accepts; anything else given on the command line is rejected.
const std::map<std::string, std::set<std::string>>& allowed_flags() {
    static const std::map<std::string, std::set<std::string>> table = {
        {"even", {"dim"}},
        {"odd", {"dim", "embed-dim"}},
        {"wstate", {"dim", "edc", "restricted"}},
        {"ztl", {"dim", "ancilla-photons", "edc"}},
        {"boost-qubit", {"dim", "ancilla-photons", "both-sides", "edc"}},
        {"boost-qutrit", {"dim", "ancilla-photons"}},
        {"ghz-boost", {"dim", "ports"}},
        {"appendix-d", {"dim", "circuit", "variant", "reflectivity"}},
    };
    return table;
}

std::set<std::string> given_flags(const RunConfig& c) {
    std::set<std::string> s;
    if (c.dim) s.insert("dim");
    if (c.embed_dim) s.insert("embed-dim");
    if (c.ancilla_photons) s.insert("ancilla-photons");
    if (c.edc) s.insert("edc");
    if (c.restricted) s.insert("restricted");
    if (c.both_sides) s.insert("both-sides");
    if (c.reflectivity) s.insert("reflectivity");
    if (c.circuit) s.insert("circuit");
    if (c.variant) s.insert("variant");
    if (c.ports) s.insert("ports");
    return s;
}

int require_dim(const RunConfig& c) {
    if (!c.dim) throw ConfigError("protocol " + c.protocol + " requires --dim");
    return *c.dim;
}

int require_photons(const RunConfig& c) {
    if (!c.ancilla_photons) throw ConfigError("protocol " + c.protocol + " requires --ancilla-photons");
    return *c.ancilla_photons;
}

void require_fixed_dim(const RunConfig& c, int d) {
    if (c.dim && *c.dim != d) {
        throw ConfigError("protocol " + c.protocol + " is defined for --dim " + std::to_string(d) + " only");
    }
}

HVariant parse_variant(const std::string& v) {
    if (v == "A") return HVariant::kA;
    if (v == "B") return HVariant::kB;
    if (v == "C") return HVariant::kC;
    throw ConfigError("unknown --variant " + v + " (expected A, B or C)");
}

std::string pattern_text(const FockPattern& p) {
    std::string s;
    for (int i = 0; i < p.n_modes(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

std::string general(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

FockPattern parse_pattern(const std::string& text) {
    std::vector<int> occ;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(item, &used);
            if (used != item.size() || n < 0) throw std::invalid_argument(item);
            occ.push_back(n);
        } catch (const std::exception&) {
            throw ConfigError("bad occupation '" + item + "' in pattern " + text);
        }
    }
    if (occ.empty()) throw ConfigError("empty pattern");
    return FockPattern(occ);
}

Format parse_format(const std::string& f) {
    if (f == "text") return Format::kText;
    if (f == "json") return Format::kJson;
    if (f == "csv") return Format::kCsv;
    throw ConfigError("unknown --format " + f);
}

io::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return io::Json::parse(in);
    } catch (const io::Json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

// Raised where a matrix that should be unitary is not.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ComplexMatrix load_unitary(const std::string& spec) {
    if (spec.rfind("fourier:", 0) == 0) {
        const int n = std::stoi(spec.substr(8));
        if (n < 1) throw ConfigError("fourier size must be positive");
        return fourier_matrix(n).matrix();
    }
    const io::Json j = read_json_file(spec);
    if (!j.is_object() || !j.contains("rows")) throw ConfigError(spec + ": unitary must be {n_modes, rows}");
    ComplexMatrix m = io::matrix_from_json(j.at("rows"));
    if (m.rows() != m.cols()) throw ConfigError(spec + ": matrix is not square");
    if (j.contains("n_modes") && j.at("n_modes").get<int>() != m.rows()) {
        throw ConfigError(spec + ": n_modes does not match rows");
    }
    if (unitarity_error(m) > tol::kUnitarity) {
        throw NumericalError(spec + ": circuit is not unitary (error " + general(unitarity_error(m)) + ")");
    }
    return m;
}

class OutputSink {
   public:
    OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

   private:
    std::ofstream file_;
    std::ostream& fallback_;
};

}  // namespace

const std::vector<std::string>& protocol_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : allowed_flags()) v.push_back(k);
        return v;
    }();
    return names;
}

FusionProtocol make_protocol(const RunConfig& c) {
    const auto it = allowed_flags().find(c.protocol);
    if (it == allowed_flags().end()) throw ConfigError("unknown protocol '" + c.protocol + "'");
    for (const auto& flag : given_flags(c)) {
        if (!it->second.count(flag)) throw ConfigError("--" + flag + " does not apply to protocol " + c.protocol);
    }
    try {
        if (c.protocol == "even") {
            const int d = require_dim(c);
            if (d < 2 || d % 2) throw ConfigError("protocol even needs an even --dim >= 2");
            return protocol_even(d);
        }
        if (c.protocol == "odd") {
            const int d = require_dim(c);
            if (d < 2) throw ConfigError("--dim must be >= 2");
            const int embed = c.embed_dim.value_or(d % 2 ? d + 1 : d);
            if (embed < d || embed % 2) throw ConfigError("--embed-dim must be even and >= --dim");
            return protocol_odd(d, embed);
        }
        if (c.protocol == "wstate") {
            const int d = require_dim(c);
            if (d < 3) throw ConfigError("protocol wstate needs --dim >= 3");
            return protocol_wstate(d, c.edc.value_or(true), c.restricted.value_or(false));
        }
        if (c.protocol == "ztl") {
            const int d = require_dim(c);
            const int r = require_photons(c);
            if (d < 2 || r < 0) throw ConfigError("protocol ztl needs --dim >= 2 and --ancilla-photons >= 0");
            return protocol_ztl(d, r, c.edc.value_or(true));
        }
        if (c.protocol == "boost-qubit") {
            require_fixed_dim(c, 2);
            const int r = require_photons(c);
            if (r < 1) throw ConfigError("--ancilla-photons must be >= 1");
            return protocol_boost_qubit(r, c.both_sides.value_or(false), c.edc.value_or(true));
        }
        if (c.protocol == "boost-qutrit") {
            require_fixed_dim(c, 3);
            const int r = require_photons(c);
            if (r < 1) throw ConfigError("--ancilla-photons must be >= 1");
            return protocol_boost_qutrit(r);
        }
        if (c.protocol == "ghz-boost") {
            const int d = require_dim(c);
            if (d < 2) throw ConfigError("--dim must be >= 2");
            const std::vector<int> ports = c.ports.value_or(std::vector<int>{0});
            for (int port : ports) {
                if (port < 0 || port >= d) throw ConfigError("--ports entries must lie in [0, dim)");
            }
            return protocol_ghz_boost(d, ports);
        }
        // appendix-d
        require_fixed_dim(c, 3);
        const int circuit = c.circuit.value_or(1);
        if (circuit != 1 && circuit != 2) throw ConfigError("--circuit must be 1 or 2");
        if (circuit == 2 && c.variant) throw ConfigError("--variant applies to circuit 1 only");
        const double refl = c.reflectivity.value_or(0.5);
        if (!(refl >= 0.0 && refl <= 1.0)) throw ConfigError("--reflectivity must lie in [0, 1]");
        return protocol_appendix_d(circuit, parse_variant(c.variant.value_or("A")), refl);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

FusionReport ghz_boost_total(int d, const std::vector<int>& ports, const FusionOptions& options) {
    std::set<int> unique(ports.begin(), ports.end());
    if (unique.size() != ports.size()) throw ConfigError("--ports must not repeat a port");
    if (d == 2 || ports.size() <= 1) {
        FusionReport r = success_probability(protocol_ghz_boost(d, ports), options);
        return r;
    }
    FusionReport total;
    double s_sum = 0.0;
    for (int port : ports) {
        const FusionReport r = success_probability(protocol_ghz_boost(d, {port}), options);
        if (total.protocol.empty()) {
            total.protocol = r.protocol;
            total.d = r.d;
            total.standard_probability = r.standard_probability;
        }
        total.boosted_probability += r.boosted_probability;
        total.pattern_count += r.pattern_count;
        total.enumerated_count += r.enumerated_count;
        s_sum += r.avg_extra_dims * static_cast<double>(r.pattern_count);
    }
    total.params = {{"d", d}, {"ports", static_cast<double>(ports.size())}};
    total.success_probability = total.standard_probability + total.boosted_probability;
    total.weighted_sum = total.success_probability * d * d;
    if (total.pattern_count) total.avg_extra_dims = s_sum / static_cast<double>(total.pattern_count);
    return total;
}

FusionReport run_protocol(const RunConfig& c) {
    const FusionOptions options{c.workers, c.per_pattern};
    if (c.protocol == "ghz-boost") {
        const FusionProtocol check = make_protocol(c);
        const auto ports = c.ports.value_or(std::vector<int>{0});
        if (check.d > 2 && ports.size() > 1) {
            if (c.per_pattern) throw ConfigError("--per-pattern is unavailable for multi-port boosting at dim >= 3");
            return ghz_boost_total(check.d, ports, options);
        }
        return success_probability(check, options);
    }
    return success_probability(make_protocol(c), options);
}

std::string format_probability(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", p);
    return buf;
}

void write_report(const FusionReport& r, Format format, std::ostream& out) {
    const bool boosted = r.boosted_probability != 0.0;
    if (format == Format::kJson) {
        out << io::to_json(r).dump(2) << '\n';
        return;
    }
    if (format == Format::kCsv) {
        out << "protocol,d,success_probability,avg_extra_dims,pattern_count";
        if (boosted) out << ",standard_probability,boosted_probability";
        out << '\n' << r.protocol << ',' << r.d << ',' << format_probability(r.success_probability) << ','
            << format_probability(r.avg_extra_dims) << ',' << r.pattern_count;
        if (boosted) {
            out << ',' << format_probability(r.standard_probability) << ','
                << format_probability(r.boosted_probability);
        }
        out << '\n';
        if (!r.outcomes.empty()) {
            out << "\npattern,w,lambda,s\n";
            for (const auto& o : r.outcomes) {
                out << pattern_text(o.pattern) << ',' << format_probability(o.weight) << ','
                    << format_probability(o.lambda) << ',' << o.s_extra << '\n';
            }
        }
        return;
    }
    out << "protocol             " << r.protocol << '\n';
    out << "d                    " << r.d << '\n';
    for (const auto& [k, v] : r.params) {
        if (k == "d") continue;
        std::string key = k;
        key.resize(21, ' ');
        out << key << general(v) << '\n';
    }
    out << "success_probability  " << format_probability(r.success_probability) << '\n';
    if (boosted) {
        out << "standard_probability " << format_probability(r.standard_probability) << '\n';
        out << "boosted_probability  " << format_probability(r.boosted_probability) << '\n';
    }
    out << "avg_extra_dims       " << format_probability(r.avg_extra_dims) << '\n';
    out << "pattern_count        " << r.pattern_count << '\n';
    if (!r.outcomes.empty()) {
        out << '\n';
        std::size_t width = 7;
        for (const auto& o : r.outcomes) width = std::max(width, pattern_text(o.pattern).size());
        std::string head = "pattern";
        head.resize(width + 2, ' ');
        out << head << "w             lambda        s\n";
        for (const auto& o : r.outcomes) {
            std::string p = pattern_text(o.pattern);
            p.resize(width + 2, ' ');
            std::string w = format_probability(o.weight), l = format_probability(o.lambda);
            w.resize(14, ' ');
            l.resize(14, ' ');
            out << p << w << l << o.s_extra << '\n';
        }
    }
}

int TableResult::exit_code() const {
    bool skipped = false;
    for (const auto& c : cells) {
        if (c.status == CellStatus::kFail) return kGoldenMismatch;
        if (c.status == CellStatus::kSkip) skipped = true;
    }
    return skipped ? kSkipped : kOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear-optical high-dimensional fusion simulator", "hdfusion"};
    app.require_subcommand(1);
    std::string format_name = "text";
    int workers = 0;

    RunConfig rc;
    int dim = 0, embed_dim = 0, photons = 0, circuit = 0;
    bool edc = true, restricted = false, both_sides = false;
    double reflectivity = 0.5;
    std::string variant;
    std::vector<int> ports;
    auto* run = app.add_subcommand("run", "Compute the success probability of one protocol");
    run->add_option("--protocol", rc.protocol, "Protocol name")
        ->required()
        ->check(CLI::IsMember(protocol_names()));
    auto* o_dim = run->add_option("--dim", dim, "Qudit dimension d");
    auto* o_embed = run->add_option("--embed-dim", embed_dim, "Embedding dimension D (odd)");
    auto* o_phot = run->add_option("--ancilla-photons", photons, "Ancilla photon count r");
    auto* o_edc = run->add_option("--edc", edc, "Apply extra-dimensional corrections (on/off)");
    auto* o_restr = run->add_option("--restricted", restricted, "Accept only single-port patterns (wstate)");
    auto* o_both = run->add_option("--both-sides", both_sides, "Boost both qubits (boost-qubit)");
    auto* o_refl = run->add_option("--reflectivity", reflectivity, "U_R reflectivity R (appendix-d)");
    auto* o_circ = run->add_option("--circuit", circuit, "Circuit id 1 or 2 (appendix-d)");
    auto* o_var = run->add_option("--variant", variant, "H_2d variant A, B or C (appendix-d circuit 1)");
    auto* o_ports = run->add_option("--ports", ports, "Boosted ports (ghz-boost)")->delimiter(',');
    run->add_option("--format", format_name, "Output format: text, json or csv");
    run->add_flag("--per-pattern", rc.per_pattern, "Include per-pattern outcomes");
    run->add_option("--workers", workers, "Worker threads (default: env HDFUSION_WORKERS or all cores)");
    run->add_option("--output", rc.output, "Write the report to a file");

    std::string table_id;
    auto* tables = app.add_subcommand("tables", "Reproduce a published table and compare");
    tables->add_option("id", table_id, "Table id")->required()->check(CLI::IsMember(table_ids()));
    tables->add_option("--format", format_name, "Output format: text, json or csv");
    tables->add_option("--workers", workers, "Worker threads");
    std::string table_output;
    tables->add_option("--output", table_output, "Write the table to a file");

    std::string correct_in, correct_out;
    auto* correct = app.add_subcommand("correct", "Synthesize an extra-dimensional correction unitary");
    correct->add_option("input", correct_in, "CorrectionInput JSON")->required();
    correct->add_option("--output", correct_out, "Write CorrectionResult JSON here");

    std::string unitary_spec, in_text, out_text;
    auto* amplitude = app.add_subcommand("amplitude", "Transition amplitude between Fock patterns");
    amplitude->add_option("unitary", unitary_spec, "Unitary JSON file or fourier:<n>")->required();
    amplitude->add_option("--in", in_text, "Input occupations, comma separated")->required();
    amplitude->add_option("--out", out_text, "Output occupations, comma separated")->required();

    for (auto* sub : {run, tables, correct, amplitude}) sub->fallthrough(false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (run->parsed()) {
            if (*o_dim) rc.dim = dim;
            if (*o_embed) rc.embed_dim = embed_dim;
            if (*o_phot) rc.ancilla_photons = photons;
            if (*o_edc) rc.edc = edc;
            if (*o_restr) rc.restricted = restricted;
            if (*o_both) rc.both_sides = both_sides;
            if (*o_refl) rc.reflectivity = reflectivity;
            if (*o_circ) rc.circuit = circuit;
            if (*o_var) rc.variant = variant;
            if (*o_ports) rc.ports = ports;
            rc.format = parse_format(format_name);
            rc.workers = workers;
            const FusionReport report = run_protocol(rc);
            OutputSink sink(rc.output, out);
            write_report(report, rc.format, sink.stream());
            return kOk;
        }
        if (tables->parsed()) {
            const Format format = parse_format(format_name);
            const TableResult t = compute_table(table_id, workers);
            OutputSink sink(table_output, out);
            write_table(t, format, sink.stream());
            return t.exit_code();
        }
        if (correct->parsed()) {
            CorrectionInput input;
            try {
                input = io::correction_input_from_json(read_json_file(correct_in));
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw ConfigError(correct_in + ": " + e.what());
            }
            const CorrectionResult result = correction_unitary(input);
            if (result.degenerate) {
                err << "error: states not linearly independent (smallest Gram eigenvalue "
                    << general(result.lambda) << ")\n";
                return kInvalidInput;
            }
            std::ostream& summary = correct_out.empty() ? err : out;
            summary << "lambda " << general(result.lambda) << "  s " << result.s << '\n';
            OutputSink sink(correct_out, out);
            sink.stream() << io::to_json(result).dump(2) << '\n';
            return kOk;
        }
        const ComplexMatrix u = load_unitary(unitary_spec);
        const FockPattern in = parse_pattern(in_text), outp = parse_pattern(out_text);
        if (in.n_modes() != u.rows() || outp.n_modes() != u.rows()) {
            throw ConfigError("patterns must have " + std::to_string(u.rows()) + " modes");
        }
        if (in.total_photons() != outp.total_photons()) {
            throw ConfigError("input and output patterns carry different photon numbers");
        }
        const Complex a = transition_amplitude(ModeUnitary(u), in, outp);
        auto snap = [](double x) { return std::abs(x) < 1e-14 ? 0.0 : x; };
        out << "[" << general(snap(a.real())) << ", " << general(snap(a.imag())) << "]  |amp|^2 "
            << general(snap(std::norm(a))) << '\n';
        return kOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace hdfusion::cli
