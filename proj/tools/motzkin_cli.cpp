#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/numbers.hpp"
#include "motzkin/prime_pairs.hpp"
#include "motzkin/ranking.hpp"
#include "motzkin/series.hpp"
#include "motzkin/triangle.hpp"
#include "motzkin/verify.hpp"
#include "motzkin/words.hpp"

namespace {

using motzkin::BigInt;
using motzkin::MotzkinWord;
using motzkin::PrimePair;
using motzkin::Rational;
using motzkin::TruncatedSeries;

enum class OutputFormat { Text, Csv, JsonLines };

struct RenderOptions {
  OutputFormat format = OutputFormat::Text;
  bool header = false;
  bool compact = false;
};

void add_format_options(CLI::App* sub, RenderOptions& opts) {
  const std::map<std::string, OutputFormat> names{
      {"text", OutputFormat::Text},
      {"csv", OutputFormat::Csv},
      {"jsonl", OutputFormat::JsonLines}};
  sub->add_option("--format", opts.format, "Output format")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
  sub->add_flag("--header", opts.header, "Emit a CSV header line");
}

std::string render_word(const MotzkinWord& w, const RenderOptions& opts) {
  return opts.compact ? compact_render(w) : w.text();
}

// Tidy rows for the machine formats: each cell is a (name, value, is_number)
// triple; big values always travel as decimal strings in JSON.
struct Cell {
  std::string name;
  std::string value;
  bool json_number = false;
};

using Row = std::vector<Cell>;

void emit_tidy(std::ostream& out, const std::vector<Row>& rows,
               const RenderOptions& opts) {
  if (opts.format == OutputFormat::Csv) {
    if (opts.header && !rows.empty()) {
      for (std::size_t i = 0; i < rows[0].size(); ++i) {
        out << (i ? "," : "") << rows[0][i].name;
      }
      out << '\n';
    }
    for (const Row& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << row[i].value;
      }
      out << '\n';
    }
    return;
  }
  for (const Row& row : rows) {
    nlohmann::ordered_json object;
    for (const Cell& cell : row) {
      if (cell.json_number) {
        object[cell.name] = std::stoll(cell.value);
      } else {
        object[cell.name] = cell.value;
      }
    }
    out << object.dump() << '\n';
  }
}

std::string sequence_value(const std::string& name, int index) {
  if (name == "motzkin") return motzkin::motzkin(index).str();
  if (name == "increment") return motzkin::motzkin_increment(index).str();
  if (name == "delta") return motzkin::delta(index).str();
  if (name == "catalan") return motzkin::catalan(index).str();
  if (name == "triangular") return motzkin::triangular(index).str();
  return motzkin::tetrahedral(index).str();
}

void cmd_numbers(const std::string& name, int count,
                 const RenderOptions& opts) {
  const int first = name == "delta" ? 1 : 0;  // the delta sequence starts at r = 1
  if (opts.format == OutputFormat::Text) {
    for (int i = first; i < first + count; ++i) {
      std::cout << sequence_value(name, i) << '\n';
    }
    return;
  }
  std::vector<Row> rows;
  for (int i = first; i < first + count; ++i) {
    rows.push_back(Row{{"index", std::to_string(i), true},
                       {"value", sequence_value(name, i), false}});
  }
  emit_tidy(std::cout, rows, opts);
}

void cmd_decompose(const std::string& text, const RenderOptions& opts) {
  const MotzkinWord word = MotzkinWord::parse(text);
  const auto pairs = decompose(word);
  std::vector<Row> rows;
  for (const PrimePair& p : pairs) {
    const MotzkinWord as_word = pair_word(p);
    rows.push_back(Row{{"n", std::to_string(p.n), true},
                       {"r", std::to_string(p.r), true},
                       {"word", render_word(as_word, opts), false},
                       {"weight", pair_weight(p).str(), false}});
  }
  if (opts.format == OutputFormat::Text) {
    for (const Row& row : rows) {
      std::cout << '(' << row[0].value << ',' << row[1].value << ")  "
                << row[2].value << "  " << row[3].value << '\n';
    }
    return;
  }
  emit_tidy(std::cout, rows, opts);
}

void cmd_pairs(int max_n, const RenderOptions& opts) {
  const auto triangle = motzkin::weight_triangle(max_n);
  if (opts.format != OutputFormat::Text) {
    std::vector<Row> rows;
    for (const auto& row : triangle) {
      for (int r = 1; r <= static_cast<int>(row.weights.size()); ++r) {
        rows.push_back(Row{{"n", std::to_string(row.n), true},
                           {"r", std::to_string(r), true},
                           {"weight", row.weights[r - 1].str(), false}});
      }
    }
    emit_tidy(std::cout, rows, opts);
    return;
  }
  std::vector<std::size_t> widths(max_n, 1);
  for (const auto& row : triangle) {
    for (std::size_t i = 0; i < row.weights.size(); ++i) {
      widths[i + 1] = std::max(widths[i + 1], row.weights[i].str().size());
    }
    widths[0] = std::max(widths[0], std::to_string(row.n).size());
  }
  std::cout << std::setw(static_cast<int>(widths[0])) << "n";
  for (int r = 1; r < max_n; ++r) {
    std::cout << "  " << std::setw(static_cast<int>(widths[r])) << r;
  }
  std::cout << '\n';
  for (const auto& row : triangle) {
    std::cout << std::setw(static_cast<int>(widths[0])) << row.n;
    for (std::size_t i = 0; i < row.weights.size(); ++i) {
      std::cout << "  " << std::setw(static_cast<int>(widths[i + 1]))
                << row.weights[i].str();
    }
    std::cout << '\n';
  }
}

void cmd_triangle(int max_n, bool by_rows_k, const RenderOptions& opts) {
  const motzkin::TriangleTable table = motzkin::triangle_table(max_n);
  if (opts.format != OutputFormat::Text) {
    std::vector<Row> rows;
    auto push = [&rows, &table](int n, int k) {
      rows.push_back(Row{{"n", std::to_string(n), true},
                         {"k", std::to_string(k), true},
                         {"count", table.at(n, k).str(), false}});
    };
    if (by_rows_k) {
      for (int k = 1; k <= table.max_k(); ++k) {
        for (int n = 2 * k; n <= max_n; ++n) push(n, k);
      }
    } else {
      for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; k <= n / 2; ++k) push(n, k);
      }
    }
    emit_tidy(std::cout, rows, opts);
    return;
  }

  auto width_of = [](const BigInt& v) { return v.str().size(); };
  if (by_rows_k) {
    std::vector<std::size_t> widths(max_n + 1, 1);
    for (int n = 2; n <= max_n; ++n) {
      widths[n] = std::max(std::to_string(n).size(),
                           width_of(table.column_sum(n)));
      for (int k = 1; k <= n / 2; ++k) {
        widths[n] = std::max(widths[n], width_of(table.at(n, k)));
      }
    }
    std::cout << std::setw(3) << "k";
    for (int n = 2; n <= max_n; ++n) {
      std::cout << "  " << std::setw(static_cast<int>(widths[n])) << n;
    }
    std::cout << '\n';
    for (int k = 1; k <= table.max_k(); ++k) {
      std::cout << std::setw(3) << k;
      for (int n = 2; n <= max_n; ++n) {
        const BigInt value = table.at(n, k);
        std::cout << "  " << std::setw(static_cast<int>(widths[n]))
                  << (value == 0 ? "" : value.str());
      }
      std::cout << '\n';
    }
    std::cout << std::setw(3) << "sum";
    for (int n = 2; n <= max_n; ++n) {
      std::cout << "  " << std::setw(static_cast<int>(widths[n]))
                << table.column_sum(n).str();
    }
    std::cout << '\n';
    return;
  }

  std::vector<std::size_t> widths(table.max_k() + 1, 1);
  std::size_t sum_width = 3;
  for (int n = 2; n <= max_n; ++n) {
    sum_width = std::max(sum_width, width_of(table.column_sum(n)));
    for (int k = 1; k <= n / 2; ++k) {
      widths[k] = std::max(widths[k], width_of(table.at(n, k)));
    }
  }
  std::cout << std::setw(3) << "n";
  for (int k = 1; k <= table.max_k(); ++k) {
    std::cout << "  " << std::setw(static_cast<int>(widths[k])) << k;
  }
  std::cout << "  " << std::setw(static_cast<int>(sum_width)) << "sum" << '\n';
  for (int n = 2; n <= max_n; ++n) {
    std::cout << std::setw(3) << n;
    for (int k = 1; k <= table.max_k(); ++k) {
      const BigInt value = table.at(n, k);
      std::cout << "  " << std::setw(static_cast<int>(widths[k]))
                << (value == 0 ? "" : value.str());
    }
    std::cout << "  " << std::setw(static_cast<int>(sum_width))
              << table.column_sum(n).str() << '\n';
  }
  std::cout << "sum check vs increments: "
            << (table.column_sums_match_increments() ? "OK" : "MISMATCH")
            << '\n';
}

void cmd_series(const std::string& name, int order,
                const RenderOptions& opts) {
  std::vector<Rational> coefficients;
  auto take = [&coefficients](const TruncatedSeries& s) {
    for (int j = 0; j < s.order(); ++j) {
      coefficients.push_back(s.coefficient(j));
    }
  };
  if (name == "motzkin") {
    take(motzkin::motzkin_gf(order));
  } else if (name == "increment") {
    take(motzkin::increment_gf(order));
  } else if (name == "pair-x") {
    take(motzkin::pair_gf_parts(order).x_part);
  } else if (name == "pair-y") {
    take(motzkin::pair_gf_parts(order).y_part);
  } else {
    take(motzkin::motzkin_gf_residual(order));
  }
  auto to_string = [](const Rational& v) {
    std::ostringstream s;
    s << v;
    return s.str();
  };
  if (opts.format == OutputFormat::Text) {
    for (const Rational& v : coefficients) std::cout << to_string(v) << '\n';
    return;
  }
  std::vector<Row> rows;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    rows.push_back(Row{{"order", std::to_string(j), true},
                       {"coefficient", to_string(coefficients[j]), false}});
  }
  emit_tidy(std::cout, rows, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ordered Motzkin words: integer sequences, exact rank/unrank, prime-pair"
      " decomposition and weights, the Motzkin triangle, and generating-"
      "function checks."};
  app.require_subcommand(1);
  int exit_code = 0;

  // numbers
  std::string sequence_name;
  int term_count = 0;
  RenderOptions numbers_opts;
  auto* numbers = app.add_subcommand(
      "numbers", "Print the first terms of a sequence");
  numbers
      ->add_option("sequence", sequence_name,
                   "motzkin|increment|delta|catalan|triangular|tetrahedral")
      ->required()
      ->check(CLI::IsMember({"motzkin", "increment", "delta", "catalan",
                             "triangular", "tetrahedral"}));
  numbers->add_option("count", term_count, "Number of terms")
      ->required()
      ->check(CLI::Range(1, 10000));
  add_format_options(numbers, numbers_opts);
  numbers->callback(
      [&] { cmd_numbers(sequence_name, term_count, numbers_opts); });

  // rank
  std::string rank_text;
  auto* rank_cmd = app.add_subcommand("rank", "Weight of a word in the row");
  rank_cmd->add_option("word", rank_text, "Word over \"0()\"")->required();
  rank_cmd->callback([&] {
    std::cout << motzkin::rank(MotzkinWord::parse(rank_text)).str() << '\n';
  });

  // unrank
  std::string unrank_index;
  RenderOptions unrank_opts;
  auto* unrank_cmd =
      app.add_subcommand("unrank", "Word at a given weight");
  unrank_cmd->add_option("index", unrank_index, "Non-negative decimal weight")
      ->required()
      ->check([](const std::string& s) -> std::string {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
          return "index must be a non-negative decimal";
        return {};
      });
  unrank_cmd->add_flag("--compact", unrank_opts.compact,
                       "Shorten zero runs to 0{k}");
  unrank_cmd->callback([&] {
    const MotzkinWord word = motzkin::unrank(BigInt(unrank_index));
    std::cout << render_word(word, unrank_opts) << '\n';
  });

  // decompose
  std::string decompose_text;
  RenderOptions decompose_opts;
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Matched pairs of a word with their weights");
  decompose_cmd->add_option("word", decompose_text, "Word over \"0()\"")
      ->required();
  add_format_options(decompose_cmd, decompose_opts);
  decompose_cmd->add_flag("--compact", decompose_opts.compact,
                          "Shorten zero runs to 0{k}");
  decompose_cmd->callback(
      [&] { cmd_decompose(decompose_text, decompose_opts); });

  // pairs
  int pairs_max_n = 0;
  RenderOptions pairs_opts;
  auto* pairs_cmd =
      app.add_subcommand("pairs", "Triangle of prime-pair weights");
  pairs_cmd->add_option("max-n", pairs_max_n, "Largest pair length")
      ->required()
      ->check(CLI::Range(2, 200));
  add_format_options(pairs_cmd, pairs_opts);
  pairs_cmd->callback([&] { cmd_pairs(pairs_max_n, pairs_opts); });

  // triangle
  int triangle_max_n = 0;
  bool by_rows_k = false;
  bool by_rows_n = false;
  RenderOptions triangle_opts;
  auto* triangle_cmd =
      app.add_subcommand("triangle", "Motzkin triangle U(n, k)");
  triangle_cmd->add_option("max-n", triangle_max_n, "Largest word length")
      ->required()
      ->check(CLI::Range(2, 200));
  auto* k_flag = triangle_cmd->add_flag("--by-rows-k", by_rows_k,
                                        "One row per pair count k");
  triangle_cmd->add_flag("--by-rows-n", by_rows_n,
                         "One row per length n, with a sum column (default)")
      ->excludes(k_flag);
  add_format_options(triangle_cmd, triangle_opts);
  triangle_cmd->callback(
      [&] { cmd_triangle(triangle_max_n, by_rows_k, triangle_opts); });

  // series
  std::string series_name;
  int series_order = 0;
  RenderOptions series_opts;
  auto* series_cmd = app.add_subcommand(
      "series", "Coefficients of a generating function");
  series_cmd
      ->add_option("name", series_name,
                   "motzkin|increment|pair-x|pair-y|residual")
      ->required()
      ->check(CLI::IsMember(
          {"motzkin", "increment", "pair-x", "pair-y", "residual"}));
  series_cmd->add_option("order", series_order, "Number of coefficients")
      ->required()
      ->check(CLI::Range(3, 512));
  add_format_options(series_cmd, series_opts);
  series_cmd->callback(
      [&] { cmd_series(series_name, series_order, series_opts); });

  // verify
  std::string verify_level = "full";
  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check every identity against its independent route");
  verify_cmd->add_option("level", verify_level, "quick|full (default full)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->callback([&] {
    const auto level = verify_level == "quick"
                           ? motzkin::verify::Level::Quick
                           : motzkin::verify::Level::Full;
    if (!motzkin::verify::run(level, std::cout)) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const motzkin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
