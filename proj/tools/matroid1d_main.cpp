// Copyright 2025 The Authors.
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

// Batch CLI over the C API.  Exit codes: 0 success, 1 domain error, 2 usage.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid1d/matroid1d.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

void check(m1d_status status) {
  if (status == M1D_OK) return;
  const int code =
      status == M1D_ERR_BAD_INPUT ? kExitUsage : kExitDomain;
  die(code, std::string(m1d_status_name(status)) + ": " + m1d_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  m1d_string_free(s);
  return out;
}

// "3+1+1" or "[3,1,1]"
std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else if (ch == '+' || ch == ',' || ch == '[' || ch == ']' ||
               std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        parts.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      die(kExitUsage, "malformed partition '" + text + "'");
    }
  }
  if (!cur.empty()) parts.push_back(std::stoi(cur));
  if (parts.empty()) die(kExitUsage, "malformed partition '" + text + "'");
  for (int p : parts)
    if (p < 1) die(kExitUsage, "partition parts must be positive");
  return parts;
}

bool looks_like_partition(const std::string& text) {
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '+' &&
        ch != ',' && ch != '[' && ch != ']' &&
        !std::isspace(static_cast<unsigned char>(ch)))
      return false;
  return !text.empty();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) die(kExitUsage, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// argument is either a partition (canonical complex of the class) or a path
// to a complex JSON file
m1d_complex* load_complex_arg(const std::string& arg) {
  m1d_complex* c = nullptr;
  if (looks_like_partition(arg)) {
    const std::vector<int> parts = parse_partition(arg);
    check(m1d_construct(parts.data(), static_cast<int>(parts.size()), &c));
  } else {
    check(m1d_complex_from_json(read_input(arg).c_str(), &c));
  }
  return c;
}

std::vector<long long> parse_hvector(const std::string& text) {
  std::vector<long long> h;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      cur += ch;
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        h.push_back(std::stoll(cur));
        cur.clear();
      }
    } else {
      die(kExitUsage, "malformed h-vector '" + text + "'");
    }
  }
  if (!cur.empty()) h.push_back(std::stoll(cur));
  if (h.empty() || h[0] != 1)
    die(kExitUsage, "h-vector must start with 1, got '" + text + "'");
  return h;
}

std::string format_vector(const std::vector<long long>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

int table_format(const std::string& name) {
  if (name == "text") return M1D_FORMAT_TEXT;
  if (name == "csv") return M1D_FORMAT_CSV;
  if (name == "json") return M1D_FORMAT_JSON;
  die(kExitUsage, "unknown format '" + name + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) die(kExitUsage, "cannot write '" + out_path + "'");
  out << text;
}

std::string witness_list(const std::string& witnesses_json) {
  const nlohmann::json names = nlohmann::json::parse(witnesses_json);
  std::ostringstream os;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) os << ", ";
    os << names[i].get<std::string>();
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification toolkit for matroid complexes of "
               "dimension <= 1"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  std::string arg_partition, arg_complex, arg_hvector, arg_any;
  std::string format_name = "text";
  int arg_n = 0;
  int max_n = 6;
  bool with_witnesses = false;
  bool recursive_mode = false;
  bool labeled = false;

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "canonical complex of a partition class");
  cmd_construct->add_option("partition", arg_partition)->required();

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "partition, h-vector and matroid verdict "
                         "of a complex (JSON file or '-')");
  cmd_classify->add_option("complex", arg_complex)->required();

  CLI::App* cmd_hvector =
      app.add_subcommand("hvector", "h-vector of a partition or complex");
  cmd_hvector->add_option("input", arg_any)->required();

  CLI::App* cmd_member = app.add_subcommand(
      "member", "is (1,h1,h2) the h-vector of a matroid complex?");
  cmd_member->add_option("hvector", arg_hvector)->required();
  cmd_member->add_flag("--witnesses", with_witnesses,
                       "list the witness partitions");
  cmd_member->add_flag("--recursive", recursive_mode,
                       "use the recursive decision procedure");

  CLI::App* cmd_ideal = app.add_subcommand(
      "ideal", "Stanley-Reisner ideal of a partition class or complex");
  cmd_ideal->add_option("input", arg_any)->required();

  CLI::App* cmd_witness = app.add_subcommand(
      "witness", "witness ideal of a partition: generators, Hilbert function, "
                 "purity");
  cmd_witness->add_option("partition", arg_partition)->required();

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "exhaustive census of matroid complexes on n vertices");
  cmd_enumerate->add_option("n", arg_n)->required();
  cmd_enumerate->add_flag("--labeled", labeled, "include edge masks");

  CLI::App* cmd_count =
      app.add_subcommand("count", "class, h-vector and labeled counts");
  cmd_count->add_option("n", arg_n)->required();

  CLI::App* cmd_table1 =
      app.add_subcommand("table1", "shading table of matroid h-vectors");
  cmd_table1->add_option("--max-n", max_n)->required();
  cmd_table1->add_option("--format", format_name, "text|csv|json");

  CLI::App* cmd_table2 =
      app.add_subcommand("table2", "partitions arranged by h-vector");
  cmd_table2->add_option("--max-n", max_n)->required();
  cmd_table2->add_option("--format", format_name, "text|csv|json");

  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "run the census crosschecks; non-zero exit on any mismatch");
  cmd_oracle->add_option("n", arg_n)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_construct) {
      const std::vector<int> parts = parse_partition(arg_partition);
      m1d_complex* c = nullptr;
      check(m1d_construct(parts.data(), static_cast<int>(parts.size()), &c));
      char* json = nullptr;
      check(m1d_complex_to_json(c, &json));
      m1d_complex_free(c);
      emit(take_string(json), out_path);
    } else if (*cmd_classify) {
      m1d_complex* c = nullptr;
      check(m1d_complex_from_json(read_input(arg_complex).c_str(), &c));
      char* json = nullptr;
      check(m1d_classify(c, &json));
      m1d_complex_free(c);
      const nlohmann::json j = nlohmann::json::parse(take_string(json));
      std::ostringstream os;
      os << "n: " << j["n"].get<int>() << '\n';
      os << "dim: " << j["dim"].get<int>() << '\n';
      os << "h-vector: "
         << format_vector(j["h"].get<std::vector<long long>>()) << '\n';
      if (j.contains("matroid"))
        os << "matroid: " << (j["matroid"].get<bool>() ? "yes" : "no") << '\n';
      if (j.contains("partition"))
        os << "partition: " << j["partition"].get<std::string>() << '\n';
      emit(os.str(), out_path);
    } else if (*cmd_hvector) {
      std::ostringstream os;
      if (looks_like_partition(arg_any)) {
        const std::vector<int> parts = parse_partition(arg_any);
        long long h[4];
        int len = 0;
        check(m1d_h_of_partition(parts.data(),
                                 static_cast<int>(parts.size()), h, 4, &len));
        os << format_vector(std::vector<long long>(h, h + len));
      } else {
        m1d_complex* c = nullptr;
        check(m1d_complex_from_json(read_input(arg_any).c_str(), &c));
        long long h[40];
        int len = 0;
        const m1d_status status = m1d_h_vector(c, h, 40, &len);
        m1d_complex_free(c);
        check(status);
        os << format_vector(std::vector<long long>(h, h + len));
      }
      emit(os.str(), out_path);
    } else if (*cmd_member) {
      const std::vector<long long> h = parse_hvector(arg_hvector);
      if (h.size() != 3) die(kExitUsage, "member expects h0,h1,h2");
      int member = 0;
      char* witnesses = nullptr;
      check(m1d_member(h[1], h[2],
                       recursive_mode ? M1D_MEMBER_RECURSIVE
                                      : M1D_MEMBER_CLOSED,
                       &member, with_witnesses ? &witnesses : nullptr));
      std::string line = member ? "yes" : "no";
      if (member && with_witnesses)
        line += ": " + witness_list(take_string(witnesses));
      else if (witnesses)
        m1d_string_free(witnesses);
      emit(line, out_path);
    } else if (*cmd_ideal) {
      m1d_complex* c = load_complex_arg(arg_any);
      m1d_ideal* ideal = nullptr;
      const m1d_status status = m1d_stanley_reisner(c, &ideal);
      m1d_complex_free(c);
      check(status);
      char* text = nullptr;
      check(m1d_ideal_to_text(ideal, &text));
      m1d_ideal_free(ideal);
      emit(take_string(text), out_path);
    } else if (*cmd_witness) {
      const std::vector<int> parts = parse_partition(arg_partition);
      m1d_ideal* ideal = nullptr;
      check(m1d_witness_ideal(parts.data(), static_cast<int>(parts.size()),
                              &ideal));
      char* text = nullptr;
      check(m1d_ideal_to_text(ideal, &text));
      long long hf[8];
      int len = 0;
      check(m1d_hilbert_function(ideal, hf, 8, &len));
      char* socle_json = nullptr;
      check(m1d_socle_report(ideal, &socle_json));
      m1d_ideal_free(ideal);
      const nlohmann::json socle = nlohmann::json::parse(take_string(socle_json));
      std::ostringstream os;
      os << take_string(text);
      os << "hilbert: " << format_vector(std::vector<long long>(hf, hf + len))
         << '\n';
      os << "socle degrees:";
      for (const auto& d : socle["degrees"]) os << ' ' << d.get<int>();
      os << '\n';
      os << "pure: " << (socle["pure"].get<bool>() ? "yes" : "no") << '\n';
      os << "level: " << (socle["level"].get<bool>() ? "yes" : "no") << '\n';
      emit(os.str(), out_path);
    } else if (*cmd_enumerate) {
      char* json = nullptr;
      check(m1d_enumerate(arg_n, labeled ? 1 : 0, &json));
      emit(take_string(json), out_path);
    } else if (*cmd_count) {
      char* json = nullptr;
      check(m1d_count(arg_n, &json));
      const nlohmann::json j = nlohmann::json::parse(take_string(json));
      std::ostringstream os;
      os << "classes: " << j["classes"].get<std::string>()
         << ", distinct h-vectors: " << j["distinct_hvectors"].get<int>()
         << ", labeled: " << j["labeled"].get<std::string>();
      emit(os.str(), out_path);
    } else if (*cmd_table1) {
      char* text = nullptr;
      check(m1d_table1(max_n, table_format(format_name), &text));
      emit(take_string(text), out_path);
    } else if (*cmd_table2) {
      char* text = nullptr;
      check(m1d_table2(max_n, table_format(format_name), &text));
      emit(take_string(text), out_path);
    } else if (*cmd_oracle) {
      char* text = nullptr;
      int all_pass = 0;
      check(m1d_oracle(arg_n, &text, &all_pass));
      emit(take_string(text), out_path);
      if (!all_pass) return kExitDomain;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
