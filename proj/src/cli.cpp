#include "siglog/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "siglog/corpus.hpp"
#include "siglog/dsl.hpp"
#include "siglog/logic.hpp"
#include "siglog/query.hpp"

namespace siglog {
namespace {

struct CliConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string kb;
  std::string eq;
  std::string dialect = "normalized";
  std::string lang;
  std::string query;
  bool porcelain = false;
};

constexpr int kInputError = 1;
constexpr int kUsageError = 2;

class Runner {
 public:
  Runner(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
      : config_(config), in_(in), out_(out), err_(err) {}

  int run() {
    try {
      if (config_.command == "normalize") return normalize_cmd();
      if (config_.command == "compile") return compile_cmd();
      if (config_.command == "ingest") return ingest_cmd();
      if (config_.command == "query") return query_cmd(false);
      if (config_.command == "equiv") return query_cmd(true);
      if (config_.command == "facts") return facts_cmd();
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kInputError;
    }
    err_ << "error: unknown command '" << config_.command << "'\n";
    return kUsageError;
  }

 private:
  Dialect dialect() const { return *parse_dialect(config_.dialect); }

  // Calls fn(path, stream) for each input file, or stdin when none is given.
  void each_input(const std::function<void(const std::string&, std::istream&)>& fn) {
    if (config_.inputs.empty()) {
      fn("<stdin>", in_);
      return;
    }
    for (const auto& path : config_.inputs) {
      std::ifstream file(path);
      if (!file) throw Error(path + ": cannot open input");
      fn(path, file);
    }
  }

  std::vector<CorpusEntry> read_inputs() {
    std::vector<CorpusEntry> all;
    each_input([&](const std::string& path, std::istream& in) {
      auto entries = read_corpus(in, path, dialect(), config_.lang);
      all.insert(all.end(), std::make_move_iterator(entries.begin()),
                 std::make_move_iterator(entries.end()));
    });
    return all;
  }

  int normalize_cmd() {
    for (const auto& e : read_inputs()) out_ << print_signature(e.sig) << "\n";
    return 0;
  }

  int compile_cmd() {
    std::vector<std::string> lines;
    each_input([&](const std::string& path, std::istream& in) {
      for_each_line(in, [&](std::size_t number, std::string_view text) {
        try {
          Dialect d = dialect();
          std::string_view lang = config_.lang;
          std::string_view raw = text;
          bool tagged = split_tagged_line(text, d, lang, raw);
          Signature sig = (tagged || d != Dialect::normalized) ? normalize(raw, d, lang)
                                                               : parse_signature(raw);
          lines.push_back(print_formula(compile(sig)));
        } catch (const Error& e) {
          throw CorpusError(path, number, e.what());
        }
      });
    });
    for (const auto& l : lines) out_ << l << "\n";
    return 0;
  }

  int ingest_cmd() {
    FactStore store;
    std::set<std::string> stored;
    if (std::filesystem::exists(config_.kb)) {
      load_kb(config_.kb, store);
      std::ifstream kb(config_.kb);
      for_each_line(kb, [&](std::size_t, std::string_view t) { stored.emplace(t); });
    }
    auto entries = read_inputs();
    std::size_t new_facts = 0;
    std::vector<std::string> appended;
    for (const auto& e : entries) {
      new_facts += store.ingest(e.sig);
      std::string text = print_signature(e.sig);
      if (!stored.count(text)) {
        stored.insert(text);
        appended.push_back(std::move(text));
      }
    }

    std::ofstream kb(config_.kb, std::ios::app);
    if (!kb) throw Error(config_.kb + ": cannot write knowledge base");
    for (const auto& line : appended) kb << line << "\n";
    out_ << "ingested " << entries.size() << " signatures (" << appended.size() << " new), "
         << new_facts << " new facts, " << store.size() << " facts total\n";
    return 0;
  }

  void load_store(FactStore& store) const {
    if (!std::filesystem::exists(config_.kb))
      throw Error(config_.kb + ": knowledge base does not exist");
    load_kb(config_.kb, store);
  }

  int query_cmd(bool equiv) {
    Signature query;
    try {
      query = canonicalize_query(parse_signature(config_.query));
    } catch (const Error& e) {
      throw CorpusError("<query>", 1, e.what());
    }
    FactStore store;
    load_store(store);

    Bindings results;
    if (equiv) {
      EquivStore eqs;
      if (!config_.eq.empty()) load_equivalences(config_.eq, eqs);
      results = answer_equiv(store, eqs, query);
    } else {
      results = answer(store, query);
    }

    if (config_.porcelain) {
      for (const auto& b : results) {
        out_ << store.signature_text(b.key).value_or(serialize_key(b.key));
        for (const auto& [label, value] : b.values) out_ << "\t" << label << "=" << value;
        out_ << "\n";
      }
      return 0;
    }
    if (results.empty()) {
      out_ << "0 results\n";
      return 0;
    }
    bool first = true;
    for (const auto& b : results) {
      if (!first) out_ << "\n";
      first = false;
      out_ << store.signature_text(b.key).value_or(serialize_key(b.key)) << "\n";
      for (const auto& [label, value] : b.values) out_ << label << "=" << value << "\n";
    }
    return 0;
  }

  int facts_cmd() {
    FactStore store;
    load_store(store);
    for (const auto& line : dump_facts(store)) out_ << line << "\n";
    return 0;
  }

  const CliConfig& config_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CliConfig config;
  CLI::App app{"siglog - function signature DSL, logic compiler and query engine"};
  app.require_subcommand(1);
  const std::vector<std::string> dialects{"java", "python", "php", "normalized"};

  auto add_corpus_flags = [&](CLI::App* cmd) {
    cmd->add_option("--dialect", config.dialect, "Raw signature dialect")
        ->check(CLI::IsMember(dialects));
    cmd->add_option("--lang", config.lang, "Language tag for raw signatures");
    cmd->add_option("inputs", config.inputs, "Input files (default: stdin)");
  };

  auto* normalize = app.add_subcommand("normalize", "Print signatures in normalized form");
  add_corpus_flags(normalize);
  auto* compile = app.add_subcommand("compile", "Print the logical form of each signature");
  add_corpus_flags(compile);
  auto* ingest = app.add_subcommand("ingest", "Add signatures to a knowledge base file");
  add_corpus_flags(ingest);
  ingest->add_option("--kb", config.kb, "Knowledge base file")->required();

  auto add_query_flags = [&](CLI::App* cmd) {
    cmd->add_option("--kb", config.kb, "Knowledge base file")->required();
    cmd->add_flag("--porcelain", config.porcelain, "One tab-separated line per result");
    cmd->add_option("query", config.query, "Query in normalized signature syntax")->required();
  };
  auto* query = app.add_subcommand("query", "Answer a wildcard query");
  add_query_flags(query);
  auto* equiv = app.add_subcommand("equiv", "Answer an EquivIn query");
  add_query_flags(equiv);
  equiv->add_option("--eq", config.eq, "Equivalence file");
  auto* facts = app.add_subcommand("facts", "Dump the facts of a knowledge base");
  facts->add_option("--kb", config.kb, "Knowledge base file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  for (auto* cmd : app.get_subcommands()) config.command = cmd->get_name();
  if ((config.command == "normalize" || config.command == "compile" ||
       config.command == "ingest") &&
      config.dialect != "normalized" && config.lang.empty()) {
    err << "usage error: --dialect " << config.dialect << " requires --lang\n";
    return kUsageError;
  }
  return Runner(config, in, out, err).run();
}

}  // namespace siglog
