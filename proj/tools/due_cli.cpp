// Command-line front end for the due library.
//
// Exit status: 0 success, 1 a verification found a mismatch, 2 usage or
// input error, 3 enumeration budget / resource error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "due/due.hpp"
#include "due/records.hpp"

namespace {

using namespace due;
using records::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct Options {
    std::string format = "text";
    // shared by most subcommands
    std::string in;
    std::string form = "bits";
    std::string out;
    std::size_t pref = 0;
    std::string dir = "encode";
    std::uint64_t steps = 1;
    std::size_t n = 0;
    std::size_t budget = 24;
    bool check = false;
    bool all_prefs = true;
    // cycle-on / recover
    std::uint64_t s0 = 0;
    std::string gens;
    std::uint64_t element = 0;
    std::uint64_t index = 0;
    // alternate codecs
    int terminus = 1;
    int anchor = 0;
    // file transform
    std::uint64_t max_bytes = 64ULL << 20;
    std::string golden_file;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::vector<std::uint8_t> read_bytes(const std::string& path, std::uint64_t max_bytes) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    if (ec) throw error(errc::empty_input, "cannot read '" + path + "'");
    if (size > max_bytes) {
        throw error(errc::budget_exceeded,
                    "'" + path + "' is " + std::to_string(size) + " bytes, limit " + std::to_string(max_bytes));
    }
    std::ifstream in(path, std::ios::binary);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!in) throw error(errc::empty_input, "cannot read '" + path + "'");
    return bytes;
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw error(errc::empty_input, "cannot write '" + path + "'");
}

BitString read_input(const Options& o) {
    if (o.form == "bits") return from_text(o.in);
    if (o.form == "hex") return from_hex(o.in);
    return file_to_bitstring(read_bytes(o.in, o.max_bytes));
}

std::string render(const BitString& s, const std::string& form) { return form == "hex" ? to_hex(s) : to_text(s); }

std::vector<Generator> parse_generators(const std::string& list, std::size_t n, ParityRef p, Direction dir) {
    std::vector<Generator> gens;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::uint64_t v = 0;
        try {
            std::size_t used = 0;
            v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw error(errc::parse_error, "generator seed '" + item + "' is not an integer");
        }
        gens.push_back({BitString::from_uint(v, n), p, dir});
    }
    return gens;
}

std::string join_bits(const std::vector<BitString>& elements) {
    std::string out;
    for (const auto& e : elements) {
        if (!out.empty()) out += ' ';
        out += to_text(e);
    }
    return out;
}

json bits_array(const std::vector<BitString>& elements) {
    json arr = json::array();
    for (const auto& e : elements) arr.push_back(to_text(e));
    return arr;
}

// ---------------------------------------------------------------------------

int run_transform(const Options& o, Direction dir) {
    const BitString s = read_input(o);
    const BitString result = iterate(s, ParityRef{o.pref}, dir, o.steps);
    if (o.form == "file") {
        if (o.out.empty()) throw error(errc::parse_error, "--form file requires --out");
        write_bytes(o.out, bitstring_to_file(result));
    } else if (!o.out.empty()) {
        std::ofstream(o.out) << render(result, o.form) << '\n';
    }
    if (json_mode(o)) {
        json j{{"n", s.length()}, {"pref", o.pref}, {"direction", to_string(dir)}, {"steps", o.steps}};
        if (o.form != "file") j["result"] = render(result, o.form);
        emit(j);
    } else if (o.form != "file" && o.out.empty()) {
        std::cout << render(result, o.form) << '\n';
    }
    return exit_ok;
}

int run_file_transform(const Options& o) {
    Options f = o;
    f.form = "file";
    if (f.out.empty()) throw error(errc::parse_error, "--out is required");
    return run_transform(f, parse_direction(o.dir));
}

int run_cycle(const Options& o) {
    const BitString s = o.form == "hex" ? from_hex(o.in) : from_text(o.in);
    const Direction dir = parse_direction(o.dir);
    const Cycle c = cycle_of(s, ParityRef{o.pref}, dir);
    const auto successors = c.successors();
    if (json_mode(o)) {
        records::PartitionRecord rec{c.n, c.pref, c.dir, {successors}};
        emit(records::to_json(rec));
    } else {
        std::cout << format_elements(successors) << '\n';
    }
    return exit_ok;
}

int run_partition(const Options& o) {
    const Direction dir = parse_direction(o.dir);
    const auto cycles = partition(o.n, ParityRef{o.pref}, dir, EnumerationBudget{o.budget});
    if (json_mode(o)) {
        emit(records::to_json(records::make_partition_record(o.n, ParityRef{o.pref}, dir, cycles)));
    } else {
        const GoldenCycleSet set = to_golden(o.n, ParityRef{o.pref}, dir, cycles);
        std::cout << serialize_goldens(std::span(&set, 1));
    }
    return exit_ok;
}

int run_spectrum(const Options& o) {
    const Direction dir = parse_direction(o.dir);
    std::vector<std::size_t> prefs;
    if (o.all_prefs) {
        for (std::size_t p = 0; p < o.n; ++p) prefs.push_back(p);
    } else {
        check_pref(o.n, ParityRef{o.pref});
        prefs.push_back(o.pref);
    }
    int status = exit_ok;
    for (std::size_t p : prefs) {
        const std::string prefix = o.all_prefs ? "p=" + std::to_string(p) + " " : "";
        if (!o.check) {
            const SpectrumRecord r = predicted_spectrum(o.n, ParityRef{p}, dir);
            if (json_mode(o)) {
                emit(records::to_json(r));
            } else {
                std::cout << prefix << "k=" << r.k << " count=" << r.count << '\n';
            }
            continue;
        }
        const SpectrumReport r = verify_spectrum(o.n, ParityRef{p}, dir, EnumerationBudget{o.budget});
        if (!r.pass()) status = exit_check_failed;
        if (json_mode(o)) {
            emit(records::to_json(r));
            continue;
        }
        std::cout << prefix << "k=" << r.predicted.k << " count=" << r.predicted.count
                  << (r.pass() ? " verified" : " FAILED") << '\n';
        for (const auto& f : r.findings) std::cout << "# " << f << '\n';
    }
    return status;
}

int run_sums(const Options& o) {
    const SumReport r = sum_identity_check(o.n, ParityRef{o.pref}, EnumerationBudget{o.budget});
    if (json_mode(o)) {
        emit(records::to_json(r));
    } else if (r.sums.size() == 1) {
        std::cout << "all cycles sum=" << r.sums.begin()->first << '\n';
    } else {
        for (const auto& [sum, count] : r.sums) std::cout << "sum=" << sum << " cycles=" << count << '\n';
    }
    if (!r.pass()) {
        std::cerr << "closed-form sum " << *r.expected << " does not hold\n";
        return exit_check_failed;
    }
    return exit_ok;
}

int run_cycle_on(const Options& o) {
    const Direction dir = parse_direction(o.dir);
    const CycleOnConfig cfg{o.n, BitString::from_uint(o.s0, o.n), parse_generators(o.gens, o.n, ParityRef{o.pref}, dir)};
    const CycleOnOrbit orbit = cycle_on(cfg);
    if (json_mode(o)) {
        emit(records::to_json(records::OrbitRecord{cfg.n, cfg.s0, cfg.generators, orbit.elements}));
    } else {
        std::cout << format_elements(orbit.elements) << '\n';
    }
    return exit_ok;
}

int run_recover(const Options& o) {
    const Direction dir = parse_direction(o.dir);
    const auto gens = parse_generators(o.gens, o.n, ParityRef{o.pref}, dir);
    const BitString s0 = recover_origin(BitString::from_uint(o.element, o.n), o.index, gens);
    if (json_mode(o)) {
        emit({{"n", o.n}, {"element", o.element}, {"index", o.index}, {"s0", s0.to_uint()}});
    } else {
        std::cout << s0.to_uint() << '\n';
    }
    return exit_ok;
}

bool parity_flag(int v, const char* name) {
    if (v != 0 && v != 1) throw error(errc::parse_error, std::string(name) + " must be 0 or 1");
    return v == 1;
}

int run_dropt(const Options& o, const std::string& action) {
    const DropTConfig cfg{parity_flag(o.terminus, "--terminus")};
    if (action == "cycles") {
        const auto cycles = dropt_partition(o.n, cfg, EnumerationBudget{o.budget});
        if (json_mode(o)) {
            json arr = json::array();
            for (const auto& c : cycles) arr.push_back(bits_array(c));
            emit({{"n", o.n}, {"terminus", o.terminus}, {"cycles", std::move(arr)}});
        } else {
            for (const auto& c : cycles) std::cout << "( " << join_bits(c) << " )\n";
        }
        return exit_ok;
    }
    const BitString s = from_text(o.in);
    const BitString r = action == "encode" ? dropt_encode(s, cfg) : dropt_decode(s, cfg);
    if (json_mode(o)) {
        emit({{"n", s.length()}, {"terminus", o.terminus}, {"direction", action}, {"result", to_text(r)}});
    } else {
        std::cout << to_text(r) << '\n';
    }
    return exit_ok;
}

int run_construct(const Options& o, bool forward) {
    const bool anchor = parity_flag(o.anchor, "--anchor");
    const BitString s = from_text(o.in);
    const BitString r = forward ? construct(s, anchor) : deconstruct(s, anchor);
    if (json_mode(o)) {
        emit({{"n", s.length()}, {"anchor", o.anchor}, {"result", to_text(r)}});
    } else {
        std::cout << to_text(r) << '\n';
    }
    return exit_ok;
}

int run_golden(const Options& o, const std::string& action) {
    if (action == "dump") {
        std::cout << golden::table1_text;
        return exit_ok;
    }
    GoldenDataset data;
    if (o.golden_file.empty()) {
        data = table1();
    } else {
        std::ifstream in(o.golden_file);
        if (!in) throw error(errc::empty_input, "cannot read '" + o.golden_file + "'");
        data = load_goldens(std::string(std::istreambuf_iterator<char>(in), {}));
    }
    int status = exit_ok;
    for (const GoldenCycleSet& set : data) {
        const auto cycles = partition(set.n, set.pref, set.dir, EnumerationBudget{o.budget});
        const CompareReport r = compare(cycles, set);
        if (!r.match) status = exit_check_failed;
        if (json_mode(o)) {
            emit({{"n", set.n},
                  {"pref", set.pref.position},
                  {"direction", to_string(set.dir)},
                  {"match", r.match},
                  {"mismatch", r.first_mismatch}});
        } else {
            std::cout << "n=" << set.n << " p=" << set.pref.position << " dir=" << to_string(set.dir)
                      << (r.match ? " match" : " MISMATCH " + r.first_mismatch) << '\n';
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic unary encoding toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"text", "json"}));

    auto add_pref = [&](CLI::App* cmd) { return cmd->add_option("--pref", o.pref, "Parity reference bit position"); };
    auto add_dir = [&](CLI::App* cmd) {
        return cmd->add_option("--dir", o.dir, "encode or decode")->check(CLI::IsMember({"encode", "decode"}));
    };
    auto add_budget = [&](CLI::App* cmd) { cmd->add_option("--budget", o.budget, "Largest n to enumerate"); };

    std::string dispatch;
    Direction codec_dir = Direction::encode;
    for (const char* name : {"encode", "decode"}) {
        auto* cmd = app.add_subcommand(name, std::string(name) + " a bit string");
        cmd->add_option("--in", o.in, "Input bits, hex digits or file path")->required();
        cmd->add_option("--form", o.form, "Input/output form")->check(CLI::IsMember({"bits", "hex", "file"}));
        add_pref(cmd);
        cmd->add_option("--steps", o.steps, "Number of steps");
        cmd->add_option("--out", o.out, "Output path");
        const Direction d = std::string(name) == "encode" ? Direction::encode : Direction::decode;
        cmd->callback([&, d] {
            dispatch = "transform";
            codec_dir = d;
        });
    }

    auto* transform_cmd = app.add_subcommand("transform", "Transform a whole file as one bit string");
    transform_cmd->add_option("--in", o.in, "Input file")->required();
    transform_cmd->add_option("--out", o.out, "Output file")->required();
    add_pref(transform_cmd);
    add_dir(transform_cmd);
    transform_cmd->add_option("--steps", o.steps, "Number of steps");
    transform_cmd->add_option("--max-bytes", o.max_bytes, "Refuse larger inputs");
    transform_cmd->callback([&] { dispatch = "file"; });

    auto* cycle_cmd = app.add_subcommand("cycle", "Orbit of one element");
    cycle_cmd->add_option("--in", o.in, "Element bits")->required();
    cycle_cmd->add_option("--form", o.form, "Input form")->check(CLI::IsMember({"bits", "hex"}));
    add_pref(cycle_cmd);
    add_dir(cycle_cmd);
    cycle_cmd->callback([&] { dispatch = "cycle"; });

    auto* partition_cmd = app.add_subcommand("partition", "All cycles for a length");
    partition_cmd->add_option("--n", o.n, "String length")->required();
    add_pref(partition_cmd);
    add_dir(partition_cmd);
    add_budget(partition_cmd);
    partition_cmd->callback([&] { dispatch = "partition"; });

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Predicted (and optionally verified) cycle spectrum");
    spectrum_cmd->add_option("--n", o.n, "String length")->required();
    auto* spectrum_pref = add_pref(spectrum_cmd);
    add_dir(spectrum_cmd);
    spectrum_cmd->add_flag("--check", o.check, "Verify by enumeration");
    add_budget(spectrum_cmd);
    spectrum_cmd->callback([&] {
        dispatch = "spectrum";
        o.all_prefs = spectrum_pref->count() == 0;
    });

    auto* sums_cmd = app.add_subcommand("sums", "Cycle sums and closed-form identity");
    sums_cmd->add_option("--n", o.n, "String length")->required();
    add_pref(sums_cmd);
    add_budget(sums_cmd);
    sums_cmd->callback([&] { dispatch = "sums"; });

    auto* cycle_on_cmd = app.add_subcommand("cycle-on", "XOR orbit over generator cycles");
    cycle_on_cmd->add_option("--n", o.n, "Element length")->required();
    cycle_on_cmd->add_option("--s0", o.s0, "Starting element")->required();
    cycle_on_cmd->add_option("--gens", o.gens, "Comma-separated generator seeds")->required();
    add_pref(cycle_on_cmd);
    add_dir(cycle_on_cmd);
    cycle_on_cmd->callback([&] { dispatch = "cycle-on"; });

    auto* recover_cmd = app.add_subcommand("recover", "Recover S0 from an orbit element and its index");
    recover_cmd->add_option("--n", o.n, "Element length")->required();
    recover_cmd->add_option("--element", o.element, "Orbit element")->required();
    recover_cmd->add_option("--index", o.index, "Index j of the element S_j")->required();
    recover_cmd->add_option("--gens", o.gens, "Comma-separated generator seeds")->required();
    add_pref(recover_cmd);
    add_dir(recover_cmd);
    recover_cmd->callback([&] { dispatch = "recover"; });

    std::string action;
    auto* dropt_cmd = app.add_subcommand("dropt", "Drop-T codec");
    dropt_cmd->require_subcommand(1);
    for (const char* name : {"encode", "decode", "cycles"}) {
        auto* sub = dropt_cmd->add_subcommand(name, std::string("Drop-T ") + name);
        if (std::string(name) == "cycles") {
            sub->add_option("--n", o.n, "String length")->required();
            add_budget(sub);
        } else {
            sub->add_option("--in", o.in, "Input bits")->required();
        }
        sub->add_option("--terminus", o.terminus, "Fixed terminus parity");
        sub->callback([&, name] {
            dispatch = "dropt";
            action = name;
        });
    }

    for (const char* name : {"construct", "deconstruct"}) {
        auto* cmd = app.add_subcommand(name, std::string(name) + " a two-half string");
        cmd->add_option("--in", o.in, "Input bits")->required();
        cmd->add_option("--anchor", o.anchor, "Parity forced at bit 0 of each half");
        cmd->callback([&, name] { dispatch = name; });
    }

    auto* golden_cmd = app.add_subcommand("golden", "Golden-data regression");
    golden_cmd->require_subcommand(1);
    auto* golden_check = golden_cmd->add_subcommand("check", "Compare partitions with golden cycles");
    golden_check->add_option("--file", o.golden_file, "Golden file (default: embedded reference table)");
    add_budget(golden_check);
    golden_check->callback([&] {
        dispatch = "golden";
        action = "check";
    });
    golden_cmd->add_subcommand("dump", "Print the embedded reference golden file")->callback([&] {
        dispatch = "golden";
        action = "dump";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (dispatch == "transform") return run_transform(o, codec_dir);
        if (dispatch == "file") return run_file_transform(o);
        if (dispatch == "cycle") return run_cycle(o);
        if (dispatch == "partition") return run_partition(o);
        if (dispatch == "spectrum") return run_spectrum(o);
        if (dispatch == "sums") return run_sums(o);
        if (dispatch == "cycle-on") return run_cycle_on(o);
        if (dispatch == "recover") return run_recover(o);
        if (dispatch == "dropt") return run_dropt(o, action);
        if (dispatch == "construct") return run_construct(o, true);
        if (dispatch == "deconstruct") return run_construct(o, false);
        if (dispatch == "golden") return run_golden(o, action);
    } catch (const error& e) {
        std::cerr << "due: " << e.what() << '\n';
        return e.is_resource() ? exit_resource : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "due: " << e.what() << '\n';
        return exit_usage;
    }
    std::cerr << "due: no command\n";
    return exit_usage;
}
