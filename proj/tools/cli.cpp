// Copyright 2026 The plft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "plft/census.hpp"
#include "plft/complex_forest.hpp"
#include "plft/continued_fraction.hpp"
#include "plft/orphan_root.hpp"
#include "plft/plft.hpp"

namespace plft::cli {

namespace {

enum class Format { Text, Csv };

struct Common {
  std::string format = "text";
  std::string out_path;

  Format fmt() const { return format == "csv" ? Format::Csv : Format::Text; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--out", common.out_path, "Write output to this file instead of stdout");
}

std::string join_terms(const std::vector<Integer>& terms, char sep) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += sep;
    out += terms[i].get_str();
  }
  return out;
}

void cmd_root(const std::string& input, Format fmt, std::ostream& out) {
  const Plft w = parse_plft(input);
  const RootPath path = root_by_iteration(w);
  const RootReport report = orphan_root_cf(w);
  if (report.root != path.root) {
    throw std::logic_error("root routes disagree: iteration gives " + to_string(path.root) +
                           ", continued fractions give " + to_string(report.root));
  }
  if (fmt == Format::Csv) {
    out << "a,b,c,d,word\n" << to_string(path.root) << ',' << to_string(path.word) << '\n';
  } else {
    out << "root=" << to_display(path.root) << " word=" << to_string(path.word) << '\n';
  }
}

void cmd_cf(const std::string& input, Format fmt, std::ostream& out) {
  if (input.find(',') != std::string::npos) {
    const Plft w = parse_plft(input);
    const PlftContinuedFraction cf = plft_cf_expand(w);
    if (fmt == Format::Csv) {
      out << "k,partial_quotients,a,b,c,d\n"
          << cf.partial_quotients.size() << ',' << join_terms(cf.partial_quotients, ';') << ','
          << to_string(cf.tail) << '\n';
    } else {
      out << to_string(cf) << '\n';
    }
    return;
  }
  const Rational r = parse_rational(input);
  const ContinuedFraction cf = cf_of_rational(r);
  if (fmt == Format::Csv) {
    out << "value,terms\n" << to_string(r) << ',' << join_terms(cf.terms, ';') << '\n';
  } else {
    out << to_string(cf) << '\n';
  }
}

void cmd_decompose(const std::string& input, Format fmt, std::ostream& out) {
  const auto word = decompose_special(parse_plft(input));
  const std::string shown = word ? to_string(*word) : "none";
  if (fmt == Format::Csv) {
    out << "word\n" << shown << '\n';
  } else {
    out << "word=" << shown << '\n';
  }
}

void cmd_descend(const std::string& first, const std::string& second, Format fmt,
                 std::ostream& out) {
  const Rational w = parse_rational(first);
  if (second.empty()) {
    const auto chain = ancestors_of_rational(w);
    if (fmt == Format::Csv) {
      out << "index,ancestor\n";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        out << i << ',' << to_fraction_string(chain[i]) << '\n';
      }
    } else {
      out << "ancestors=";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        out << (i ? " " : "") << to_string(chain[i]);
      }
      out << '\n';
    }
    return;
  }
  const Rational target = parse_rational(second);
  const bool result = is_descendant_rational(w, target);
  if (fmt == Format::Csv) {
    out << "ancestor,target,descendant\n"
        << to_fraction_string(w) << ',' << to_fraction_string(target) << ','
        << (result ? "true" : "false") << '\n';
  } else {
    out << "descendant=" << (result ? "true" : "false") << '\n';
  }
}

void cmd_census(std::uint64_t max_d, unsigned threads, bool verify, std::ostream& out) {
  if (max_d == 0) throw std::invalid_argument("--max must be at least 1");
  const auto rows = census_table(max_d, CensusOptions{threads, verify});
  if (verify) {
    for (const auto& row : rows) {
      if (row.h_direct != row.h_closed || row.orphan_count != row.h_closed) {
        throw std::logic_error("census routes disagree at D=" + std::to_string(row.D));
      }
    }
  }
  write_census_csv(out, rows);
}

void cmd_series(std::vector<std::uint64_t> points, std::uint64_t max_x, unsigned threads,
                std::ostream& out) {
  if (points.empty()) {
    if (max_x < 2) throw std::invalid_argument("series needs --points or --max >= 2");
    for (std::uint64_t x = 2; x <= max_x; ++x) points.push_back(x);
  }
  write_series_csv(out, ratio_series(points, threads));
}

void cmd_aux(std::uint64_t x, Format fmt, std::ostream& out) {
  const double sum = aux_sum(x);
  const double reference = aux_reference(x);
  std::ostringstream line;
  line.precision(12);
  if (fmt == Format::Csv) {
    line << "x,sum,reference,ratio\n" << x << ',' << sum << ',' << reference << ','
         << sum / reference << '\n';
  } else {
    line << "x=" << x << " sum=" << sum << " reference=" << reference
         << " ratio=" << sum / reference << '\n';
  }
  out << line.str();
}

void cmd_corphan(const std::string& input, const OrphanParams& params, Format fmt,
                 std::ostream& out) {
  const GaussianRational z = parse_gaussian(input);
  const bool orphan = is_complex_orphan(z, params);
  if (fmt == Format::Csv) {
    out << "z,u,v,orphan\n"
        << to_string(z) << ',' << params.u << ',' << params.v << ','
        << (orphan ? "true" : "false") << '\n';
    return;
  }
  out << "orphan=" << (orphan ? "true" : "false");
  if (!orphan) {
    const auto up = complex_parent(z, params);
    out << " parent=" << to_string(up->value) << " move=" << to_char(up->move);
  }
  out << '\n';
}

void cmd_cchain(const std::string& input, const OrphanParams& params, Format fmt,
                std::ostream& out) {
  const ChainResult chain = ancestor_chain(parse_gaussian(input), params);
  if (fmt == Format::Csv) {
    write_chain_csv(out, chain);
    return;
  }
  std::string moves;
  for (const auto& step : chain.steps) moves += to_char(step.move);
  out << "root=" << to_string(chain.root) << " steps=" << chain.steps.size()
      << " word=" << moves << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the forest of positive linear fractional transformations",
               "plft"};
  app.require_subcommand(1);

  Common common;
  std::string arg1;
  std::string arg2;
  std::uint64_t max_value = 0;
  std::uint64_t x_value = 0;
  unsigned threads = 1;
  bool verify = false;
  std::vector<std::uint64_t> points;
  std::uint64_t u = 1;
  std::uint64_t v = 1;

  std::function<void(std::ostream&)> action;

  auto* root = app.add_subcommand("root", "Orphan root and L/R word of a PLFT a,b,c,d");
  root->add_option("plft", arg1, "PLFT as a,b,c,d")->required();
  add_common(root, common);
  root->callback([&] { action = [&](std::ostream& o) { cmd_root(arg1, common.fmt(), o); }; });

  auto* cf = app.add_subcommand("cf", "Continued fraction of a rational p/q or a PLFT a,b,c,d");
  cf->add_option("value", arg1, "p/q or a,b,c,d")->required();
  add_common(cf, common);
  cf->callback([&] { action = [&](std::ostream& o) { cmd_cf(arg1, common.fmt(), o); }; });

  auto* dec = app.add_subcommand("decompose", "Word in L, R for a determinant-one PLFT");
  dec->add_option("plft", arg1, "PLFT as a,b,c,d")->required();
  add_common(dec, common);
  dec->callback([&] { action = [&](std::ostream& o) { cmd_decompose(arg1, common.fmt(), o); }; });

  auto* desc = app.add_subcommand(
      "descend", "Calkin-Wilf descendant test (two values) or ancestor chain (one value)");
  desc->add_option("ancestor", arg1, "p/q")->required();
  desc->add_option("target", arg2, "p/q");
  add_common(desc, common);
  desc->callback(
      [&] { action = [&](std::ostream& o) { cmd_descend(arg1, arg2, common.fmt(), o); }; });

  auto* census = app.add_subcommand("census", "CSV table D,nu2,sigma,tau,h for D = 1..max");
  census->add_option("--max", max_value, "Largest determinant")->required();
  census->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--verify", verify, "Cross-check every row by direct enumeration");
  add_common(census, common);
  census->callback(
      [&] { action = [&](std::ostream& o) { cmd_census(max_value, threads, verify, o); }; });

  auto* series = app.add_subcommand("series", "CSV of the summatory function and its ratio");
  series->add_option("--points", points, "Comma-separated x values")->delimiter(',');
  series->add_option("--max", max_value, "Emit every x = 2..max");
  series->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_common(series, common);
  series->callback(
      [&] { action = [&](std::ostream& o) { cmd_series(points, max_value, threads, o); }; });

  auto* aux = app.add_subcommand("aux", "Double sum of 1/(a(a-c)) against ln^2(x)/2");
  aux->add_option("x", x_value, "Upper limit x >= 2")->required();
  add_common(aux, common);
  aux->callback([&] { action = [&](std::ostream& o) { cmd_aux(x_value, common.fmt(), o); }; });

  auto* corphan = app.add_subcommand("corphan", "Complex (u,v)-orphan test");
  corphan->add_option("z", arg1, "p/q+r/s*i")->required();
  corphan->add_option("--u", u, "Left exponent u >= 1");
  corphan->add_option("--v", v, "Right exponent v >= 1");
  add_common(corphan, common);
  corphan->callback([&] {
    action = [&](std::ostream& o) { cmd_corphan(arg1, OrphanParams(u, v), common.fmt(), o); };
  });

  auto* cchain = app.add_subcommand("cchain", "Ancestor chain of a complex number");
  cchain->add_option("z", arg1, "p/q+r/s*i")->required();
  cchain->add_option("--u", u, "Left exponent u >= 1");
  cchain->add_option("--v", v, "Right exponent v >= 1");
  add_common(cchain, common);
  cchain->callback([&] {
    action = [&](std::ostream& o) { cmd_cchain(arg1, OrphanParams(u, v), common.fmt(), o); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInputError;
  }

  try {
    std::ostringstream buffer;
    action(buffer);
    if (common.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(common.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << common.out_path << " for writing\n";
        return kExitInputError;
      }
      file << buffer.str();
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace plft::cli
