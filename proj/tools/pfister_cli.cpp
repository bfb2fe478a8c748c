// pfister: single-shot computations and verification campaigns. Links only
// the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pfister/pfister.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct CallError {
  pf_status status;
};

void check(pf_status s) {
  if (s != PF_OK) throw CallError{s};
}

struct Str {
  char* p = nullptr;
  ~Str() { pf_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using KHandle = Handle<pf_kelement, pf_kelement_free>;
using FormHandle = Handle<pf_form, pf_form_free>;
using FieldHandle = Handle<pf_field, pf_field_free>;
using QuadricHandle = Handle<pf_quadric, pf_quadric_free>;

int report_error(const CallError& e, const std::string& input) {
  std::cerr << "error: " << pf_status_name(e.status) << ": " << pf_last_error()
            << "\n";
  const long pos = pf_last_error_position();
  if (pos >= 0 && !input.empty()) {
    std::cerr << "  " << input << "\n  " << std::string(pos, ' ') << "^\n";
  }
  return e.status == PF_ERR_PARSE ? kExitUsage : kExitError;
}

void print(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor K-theory mod 2, quadratic forms and norm quadrics over Q"};
  app.require_subcommand(1);
  std::string last_input;
  std::function<void()> action;

  // symbol ------------------------------------------------------------------
  auto* symbol = app.add_subcommand("symbol", "K-elements such as {2,3}+{5,-1}");
  symbol->require_subcommand(1);
  std::string sym_text;
  std::uint64_t residue_p = 0;
  auto* sym_eval = symbol->add_subcommand("eval", "canonical form");
  sym_eval->add_option("element", sym_text)->required();
  sym_eval->callback([&] {
    action = [&] {
      last_input = sym_text;
      KHandle x;
      check(pf_kelement_parse(sym_text.c_str(), &x.p));
      Str s;
      check(pf_kelement_str(x.p, &s.p));
      int deg = 0;
      check(pf_kelement_degree(x.p, &deg));
      print(s.get() + "  (degree " + std::to_string(deg) + ")");
    };
  });
  auto* sym_zero = symbol->add_subcommand("iszero", "zero test in K_n(Q)/2");
  sym_zero->add_option("element", sym_text)->required();
  sym_zero->callback([&] {
    action = [&] {
      last_input = sym_text;
      KHandle x;
      check(pf_kelement_parse(sym_text.c_str(), &x.p));
      int z = 0;
      check(pf_kelement_is_zero(x.p, &z));
      print(z ? "zero" : "nonzero");
    };
  });
  auto* sym_res = symbol->add_subcommand("residue", "tame residue at an odd prime");
  sym_res->add_option("element", sym_text)->required();
  sym_res->add_option("--p", residue_p, "odd prime")->required();
  sym_res->callback([&] {
    action = [&] {
      last_input = sym_text;
      KHandle x;
      check(pf_kelement_parse(sym_text.c_str(), &x.p));
      Str s;
      check(pf_kelement_residue(x.p, residue_p, &s.p));
      print(s.get());
    };
  });

  // form --------------------------------------------------------------------
  auto* form = app.add_subcommand("form", "diagonal forms such as <1,-2> or <<2,3>>");
  form->require_subcommand(1);
  std::string form_text, rep_value;
  auto with_form = [&](auto&& body) {
    return [&, body] {
      action = [&, body] {
        last_input = form_text;
        FormHandle f;
        check(pf_form_parse(form_text.c_str(), &f.p));
        body(f.p);
      };
    };
  };
  auto* f_inv = form->add_subcommand("invariants", "dimension, discriminant, Hasse, signature");
  f_inv->add_option("form", form_text)->required();
  f_inv->callback(with_form([](pf_form* f) {
    Str s;
    check(pf_form_invariants(f, &s.p));
    print(s.get());
  }));
  auto* f_witt = form->add_subcommand("witt", "Witt index and anisotropic kernel");
  f_witt->add_option("form", form_text)->required();
  f_witt->callback(with_form([](pf_form* f) {
    int index = 0;
    FormHandle kernel;
    check(pf_form_witt(f, &index, &kernel.p));
    Str s;
    check(pf_form_str(kernel.p, &s.p));
    print("witt_index: " + std::to_string(index) + "\nkernel: " + s.get());
  }));
  auto* f_deg = form->add_subcommand("degree", "degree in the I-adic filtration");
  f_deg->add_option("form", form_text)->required();
  f_deg->callback(with_form([](pf_form* f) {
    int deg = 0, hyp = 0;
    check(pf_form_i_degree(f, &deg, &hyp));
    print(hyp ? "hyperbolic" : std::to_string(deg));
  }));
  auto* f_hyp = form->add_subcommand("hyperbolic", "hyperbolicity test");
  f_hyp->add_option("form", form_text)->required();
  f_hyp->callback(with_form([](pf_form* f) {
    int h = 0;
    check(pf_form_is_hyperbolic(f, &h));
    print(h ? "true" : "false");
  }));
  auto* f_iso = form->add_subcommand("isotropic", "isotropy with a witness");
  f_iso->add_option("form", form_text)->required();
  f_iso->callback(with_form([](pf_form* f) {
    int iso = 0;
    Str w;
    check(pf_form_isotropic(f, &iso, &w.p));
    print(iso ? "isotropic " + w.get() : "anisotropic");
  }));
  auto* f_rep = form->add_subcommand("represents", "does the form represent b");
  f_rep->add_option("form", form_text)->required();
  f_rep->add_option("b", rep_value)->required();
  f_rep->callback(with_form([&rep_value](pf_form* f) {
    int r = 0;
    Str w;
    check(pf_form_represents(f, rep_value.c_str(), &r, &w.p));
    print(r ? "represented " + w.get() : "not represented");
  }));

  // quadric -----------------------------------------------------------------
  auto* quadric = app.add_subcommand("quadric", "norm quadric of a symbol (a1,...,an)");
  quadric->require_subcommand(1);
  std::string q_text;
  int depth = 0;
  auto* q_pts = quadric->add_subcommand("points", "rational and quadratic points");
  q_pts->add_option("symbol", q_text)->required();
  q_pts->add_option("--depth", depth, "section depth")->check(CLI::NonNegativeNumber);
  q_pts->callback([&] {
    action = [&] {
      last_input = q_text;
      QuadricHandle q;
      check(pf_quadric_build(q_text.c_str(), &q.p));
      FormHandle f;
      check(pf_quadric_form(q.p, &f.p));
      Str fs, pts;
      check(pf_form_str(f.p, &fs.p));
      check(pf_quadric_points(q.p, depth, &pts.p));
      print("form: " + fs.get() + "\n" + pts.get());
    };
  });
  auto* q_wit = quadric->add_subcommand("witness", "generic-point isotropy witness");
  q_wit->add_option("symbol", q_text)->required();
  q_wit->callback([&] {
    action = [&] {
      last_input = q_text;
      QuadricHandle q;
      check(pf_quadric_build(q_text.c_str(), &q.p));
      int ok = 0;
      Str s;
      check(pf_quadric_witness(q.p, &ok, &s.p));
      print(s.get() + "\nverified: " + (ok ? "true" : "false"));
    };
  });

  // transfer ----------------------------------------------------------------
  auto* transfer = app.add_subcommand("transfer", "norm transfer K_1(E) -> K_1(Q)");
  std::string t_field, t_elem, t_times;
  transfer->add_option("--field", t_field, "Q(sqrt d) or Q[x]/(f); omit for Q");
  transfer->add_option("--element", t_elem, "power-basis coordinates")->required();
  transfer->add_option("--times", t_times, "multiply the transfer by this element");
  transfer->callback([&] {
    action = [&] {
      FieldHandle e;
      if (!t_field.empty()) {
        last_input = t_field;
        check(pf_field_parse(t_field.c_str(), &e.p));
      }
      last_input = t_elem;
      KHandle t;
      check(pf_transfer_k1(e.p, t_elem.c_str(), &t.p));
      Str ts;
      check(pf_kelement_str(t.p, &ts.p));
      std::string out = "transfer: " + ts.get();
      if (!t_times.empty()) {
        last_input = t_times;
        KHandle y, prod;
        check(pf_kelement_parse(t_times.c_str(), &y.p));
        check(pf_kelement_multiply(t.p, y.p, &prod.p));
        Str ps;
        check(pf_kelement_str(prod.p, &ps.p));
        int z = 0;
        check(pf_kelement_is_zero(prod.p, &z));
        out += "\nproduct: " + ps.get() + "\nproduct is " + (z ? "zero" : "nonzero");
      }
      print(out);
    };
  });

  // hilbert -----------------------------------------------------------------
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbols (a,b)_v");
  std::string h_a, h_b, h_place;
  hilbert->add_option("a", h_a)->required();
  hilbert->add_option("b", h_b)->required();
  hilbert->add_option("--place", h_place, "inf, 2 or an odd prime; default all");
  hilbert->callback([&] {
    action = [&] {
      if (h_place.empty()) {
        Str s;
        check(pf_hilbert_table(h_a.c_str(), h_b.c_str(), &s.p));
        print(s.get());
      } else {
        int h = 0;
        check(pf_hilbert(h_a.c_str(), h_b.c_str(), h_place.c_str(), &h));
        print(std::to_string(h));
      }
    };
  });

  // field -------------------------------------------------------------------
  auto* field = app.add_subcommand("field", "number field helpers");
  field->require_subcommand(1);
  std::string fd_text, fd_elem, fd_span, fd_x;
  auto* fd_norm = field->add_subcommand("norm", "field norm of an element");
  fd_norm->add_option("field", fd_text)->required();
  fd_norm->add_option("element", fd_elem)->required();
  fd_norm->callback([&] {
    action = [&] {
      last_input = fd_text;
      FieldHandle e;
      check(pf_field_parse(fd_text.c_str(), &e.p));
      last_input = fd_elem;
      Str s;
      check(pf_field_norm(e.p, fd_elem.c_str(), &s.p));
      print(s.get());
    };
  });
  auto* fd_simple = field->add_subcommand("simple", "write x = v1/v2 with v1, v2 in a span");
  fd_simple->add_option("field", fd_text)->required();
  fd_simple->add_option("--span", fd_span, "elements separated by ';'")->required();
  fd_simple->add_option("--x", fd_x, "the element x")->required();
  fd_simple->callback([&] {
    action = [&] {
      last_input = fd_text;
      FieldHandle e;
      check(pf_field_parse(fd_text.c_str(), &e.p));
      last_input.clear();
      Str s;
      check(pf_field_simple(e.p, fd_span.c_str(), fd_x.c_str(), &s.p));
      print(s.get());
    };
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, degree_set, out_path, checks;
  pf_campaign_config cfg;
  pf_campaign_default_config(&cfg);
  std::uint64_t seed = cfg.seed;
  {
    Str names;
    pf_campaign_suites(&names.p);
    std::vector<std::string> list;
    std::stringstream ss(names.get());
    for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(list));
  }
  auto* seed_opt = verify->add_option("--seed", seed);
  verify->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  verify->add_option("--coeff-bound", cfg.coeff_bound)->check(CLI::PositiveNumber);
  verify->add_option("--degree-set", degree_set, "e.g. 1,2,3");
  verify->add_option("--depth", cfg.depth)->check(CLI::NonNegativeNumber);
  auto* out_opt = verify->add_option("--out", out_path, "report file");
  verify->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--record-time", cfg.record_time, "append wall time to the report");
  verify->add_option("--krs-degree", cfg.krs_degree);
  verify->add_option("--checks", checks, "comma separated subset of checks");
  int verify_status = 0;
  verify->callback([&] {
    action = [&] {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("PFISTER_SEED")) {
          try {
            seed = std::stoull(env);
          } catch (const std::exception&) {
            throw CLI::ValidationError("PFISTER_SEED", "not an integer");
          }
        }
      }
      if (out_opt->count() == 0) {
        if (const char* env = std::getenv("PFISTER_OUT")) out_path = env;
      }
      cfg.seed = seed;
      cfg.degree_set = degree_set.empty() ? nullptr : degree_set.c_str();
      cfg.checks = checks.empty() ? nullptr : checks.c_str();
      last_input = degree_set;
      Str report;
      int passed = 0;
      check(pf_campaign_run(suite.c_str(), &cfg, &report.p, &passed));
      if (out_path.empty()) {
        std::cout << report.get();
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << report.get();
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          verify_status = kExitUsage;
          return;
        }
        std::cout << (passed ? "PASS" : "FAIL") << " " << suite << " -> "
                  << out_path << "\n";
      }
      verify_status = passed ? 0 : kExitFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    action();
  } catch (const CallError& e) {
    return report_error(e, last_input);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return verify_status;
}
