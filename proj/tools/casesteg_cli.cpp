// casesteg command-line front end. Talks to the library only through the C
// API. stdout carries artifact data only; diagnostics go to stderr.

#include "casesteg/casesteg.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OperationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptionsDeleter {
    void operator()(cs_options* o) const { cs_options_destroy(o); }
};
struct BufferDeleter {
    void operator()(cs_buffer* b) const { cs_buffer_destroy(b); }
};
using OptionsPtr = std::unique_ptr<cs_options, OptionsDeleter>;
using BufferPtr = std::unique_ptr<cs_buffer, BufferDeleter>;

struct Invocation {
    std::string subcommand;
    std::string channel;
    std::string in;
    std::string out;
    std::string payload;
    std::optional<std::string> payload_text;
    std::string stego;
    std::string mode;
    std::string strategy;
    std::string profile;
    std::string key;
};

void check(cs_status status)
{
    if (status != CS_OK) {
        std::string message = cs_last_error();
        if (message.empty()) {
            message = cs_status_name(status);
        }
        throw OperationError(message);
    }
}

std::string read_all(const std::string& path)
{
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw OperationError("cannot open '" + path + "' for reading");
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
}

void write_all(const std::string& path, const std::uint8_t* data, std::size_t size)
{
    const auto* chars = reinterpret_cast<const char*>(data);
    if (path.empty() || path == "-") {
        std::cout.write(chars, static_cast<std::streamsize>(size));
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !file.write(chars, static_cast<std::streamsize>(size))) {
        throw OperationError("cannot write '" + path + "'");
    }
}

std::vector<std::uint8_t> parse_hex(const std::string& hex)
{
    if (hex.empty() || hex.size() % 2 != 0) {
        throw UsageError("--key needs an even, non-zero number of hex digits");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = nibble(hex[i]);
        const int lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            throw UsageError("--key is not valid hex");
        }
        out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return out;
}

// Validates channel-specific flags and builds the options handle. Runs
// before any file is touched.
OptionsPtr make_options(const Invocation& inv)
{
    cs_channel channel{};
    if (inv.channel == "html") {
        channel = CS_CHANNEL_HTML;
    } else if (inv.channel == "caseless") {
        channel = CS_CHANNEL_CASELESS;
    } else if (inv.channel == "ident") {
        channel = CS_CHANNEL_IDENT;
    } else {
        throw UsageError("--channel must be html, caseless or ident");
    }
    if (!inv.mode.empty() && channel != CS_CHANNEL_HTML) {
        throw UsageError("--mode is only valid with --channel html");
    }
    if ((!inv.strategy.empty() || !inv.profile.empty()) && channel != CS_CHANNEL_CASELESS) {
        throw UsageError("--strategy and --profile are only valid with --channel caseless");
    }

    cs_options* raw = nullptr;
    check(cs_options_create(channel, &raw));
    OptionsPtr options(raw);

    if (!inv.mode.empty()) {
        check(cs_options_set_mode(options.get(),
                                  inv.mode == "header-tag" ? CS_MODE_HEADER_TAG : CS_MODE_INBAND));
    }
    if (!inv.strategy.empty()) {
        cs_strategy s = CS_STRATEGY_ALL;
        if (inv.strategy == "first-char") s = CS_STRATEGY_FIRST_CHAR;
        else if (inv.strategy == "keywords") s = CS_STRATEGY_KEYWORDS;
        else if (inv.strategy == "identifiers") s = CS_STRATEGY_IDENTIFIERS;
        check(cs_options_set_strategy(options.get(), s));
    }
    if (!inv.key.empty()) {
        const auto key = parse_hex(inv.key);
        check(cs_options_set_key(options.get(), key.data(), key.size()));
    }
    return options;
}

void apply_profile(cs_options* options, const std::string& profile)
{
    if (profile.empty()) {
        return;
    }
    if (profile == "pascal" || profile == "basic") {
        check(cs_options_set_profile_builtin(options, profile.c_str()));
        return;
    }
    const std::string text = read_all(profile);
    check(cs_options_set_profile_text(options, text.data(), text.size()));
}

std::string load_payload(const Invocation& inv)
{
    if (inv.payload_text) {
        return *inv.payload_text;
    }
    return read_all(inv.payload);
}

BufferPtr do_embed(const cs_options* options, const std::string& cover, const std::string& payload,
                   cs_embed_stats* stats)
{
    cs_buffer* raw = nullptr;
    check(cs_embed(options, cover.data(), cover.size(),
                   reinterpret_cast<const std::uint8_t*>(payload.data()), payload.size(), &raw,
                   stats));
    return BufferPtr(raw);
}

int run(const Invocation& inv)
{
    OptionsPtr options = make_options(inv);
    const bool needs_payload = inv.subcommand == "embed" ||
                               (inv.subcommand == "analyze" && inv.stego.empty());
    if (needs_payload && inv.payload.empty() && !inv.payload_text) {
        throw UsageError("one of --payload or --payload-text is required");
    }
    if ((inv.in.empty() || inv.in == "-") && (inv.payload == "-")) {
        throw UsageError("cover and payload cannot both come from standard input");
    }
    apply_profile(options.get(), inv.profile);

    const std::string input = read_all(inv.in);

    if (inv.subcommand == "capacity") {
        std::uint64_t bits = 0;
        check(cs_capacity(options.get(), input.data(), input.size(), &bits));
        const std::string line = std::to_string(bits) + "\n";
        write_all(inv.out, reinterpret_cast<const std::uint8_t*>(line.data()), line.size());
        return 0;
    }

    if (inv.subcommand == "embed") {
        cs_embed_stats stats{};
        BufferPtr stego = do_embed(options.get(), input, load_payload(inv), &stats);
        write_all(inv.out, cs_buffer_data(stego.get()), cs_buffer_size(stego.get()));
        std::cerr << "embedded " << stats.payload_bits << " of " << stats.capacity_bits
                  << " payload bits\n";
        return 0;
    }

    if (inv.subcommand == "extract") {
        cs_buffer* raw = nullptr;
        check(cs_extract(options.get(), input.data(), input.size(), &raw));
        BufferPtr payload(raw);
        write_all(inv.out, cs_buffer_data(payload.get()), cs_buffer_size(payload.get()));
        return 0;
    }

    // analyze
    std::string stego;
    if (!inv.stego.empty()) {
        stego = read_all(inv.stego);
    } else {
        BufferPtr produced = do_embed(options.get(), input, load_payload(inv), nullptr);
        stego.assign(reinterpret_cast<const char*>(cs_buffer_data(produced.get())),
                     cs_buffer_size(produced.get()));
    }
    cs_buffer* raw = nullptr;
    check(cs_analyze(options.get(), input.data(), input.size(), stego.data(), stego.size(), &raw,
                     nullptr));
    BufferPtr report(raw);
    write_all(inv.out, cs_buffer_data(report.get()), cs_buffer_size(report.get()));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hide and recover bits in the letter case of HTML and source code"};
    app.require_subcommand(1);

    Invocation inv;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--channel", inv.channel, "html | caseless | ident")
            ->required()
            ->check(CLI::IsMember({"html", "caseless", "ident"}));
        sub->add_option("--in", inv.in, "input document (default: stdin)");
        sub->add_option("--out", inv.out, "output file (default: stdout)");
        sub->add_option("--mode", inv.mode, "html length mode: inband | header-tag")
            ->check(CLI::IsMember({"inband", "header-tag"}));
        sub->add_option("--strategy", inv.strategy,
                        "caseless strategy: all | first-char | keywords | identifiers")
            ->check(CLI::IsMember({"all", "first-char", "keywords", "identifiers"}));
        sub->add_option("--profile", inv.profile, "caseless profile: pascal | basic | <file>");
        sub->add_option("--key", inv.key, "hex XOR key (obfuscation only, not encryption)");
    };
    auto add_payload = [&](CLI::App* sub) {
        auto* file = sub->add_option("--payload", inv.payload, "payload file");
        auto* text = sub->add_option("--payload-text", inv.payload_text, "payload as literal text");
        file->excludes(text);
    };

    CLI::App* embed = app.add_subcommand("embed", "hide a payload in a cover document");
    add_common(embed);
    add_payload(embed);
    CLI::App* extract = app.add_subcommand("extract", "recover a payload from a stego document");
    add_common(extract);
    CLI::App* capacity = app.add_subcommand("capacity", "print the payload capacity in bits");
    add_common(capacity);
    CLI::App* analyze =
        app.add_subcommand("analyze", "compare cover and stego byte histograms");
    add_common(analyze);
    add_payload(analyze);
    analyze->add_option("--stego", inv.stego,
                        "stego document; when absent the payload is embedded into --in");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (CLI::App* sub : app.get_subcommands()) {
        inv.subcommand = sub->get_name();
    }

    try {
        return run(inv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OperationError& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
