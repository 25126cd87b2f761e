#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpc/bassserre.hpp"
#include "gpc/classify.hpp"
#include "gpc/frontend.hpp"
#include "gpc/kernel.hpp"
#include "gpc/oracle.hpp"
#include "gpc/parabolic.hpp"

namespace gpc::cli {

  namespace {
    using json = nlohmann::ordered_json;

    // Reported as exit code 2.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::string                spec_path;
      bool                       as_json = false;
      std::uint64_t              seed    = 1;
      std::optional<std::size_t> budget;
    };

    json exponent_json(Exponent const& e) {
      if (e >= std::numeric_limits<long long>::min()
          && e <= std::numeric_limits<long long>::max()) {
        return e.convert_to<long long>();
      }
      return e.str();
    }

    json labels(Presentation const& p, VertexSet S) {
      json out = json::array();
      for (auto v : S) {
        out.push_back(p.label(v));
      }
      return out;
    }

    json parabolic_json(Presentation const& p, ParabolicSubgroup const& P) {
      return json{{"conjugator", format(p, P.conjugator())},
                  {"base", labels(p, P.base())},
                  {"text", format(p, P)}};
    }

    class Session {
     public:
      Session(Options opts, std::ostream& out) : opts_(std::move(opts)), out_(out) {}

      Presentation const& spec() {
        if (!p_) {
          if (opts_.spec_path.empty()) {
            throw UsageError("this command needs --spec FILE");
          }
          std::ifstream in(opts_.spec_path);
          if (!in) {
            throw UsageError("cannot read spec file '" + opts_.spec_path + "'");
          }
          std::stringstream buffer;
          buffer << in.rdbuf();
          try {
            p_ = parse_spec(buffer.str());
          } catch (ParseError const& e) {
            throw UsageError(opts_.spec_path + ":" + e.what());
          }
        }
        return *p_;
      }

      NormalForm element(std::string const& text) {
        try {
          return parse_element(spec(), text);
        } catch (ParseError const& e) {
          throw UsageError("in '" + text + "': " + e.what());
        }
      }
      std::vector<NormalForm> elements(std::vector<std::string> const& texts) {
        std::vector<NormalForm> out;
        for (auto const& t : texts) {
          out.push_back(element(t));
        }
        return out;
      }
      VertexSet vertex_set(std::string const& text) {
        try {
          return parse_vertex_set(spec(), text);
        } catch (ParseError const& e) {
          throw UsageError("in '" + text + "': " + e.what());
        }
      }
      ParabolicSubgroup parabolic(std::string const& text) {
        try {
          return parse_parabolic(spec(), text);
        } catch (ParseError const& e) {
          throw UsageError("in '" + text + "': " + e.what());
        }
      }
      vertex_type vertex(std::string const& label) {
        auto v = spec().find(label);
        if (!v) {
          throw UsageError("in '" + label + "': 1:1: unknown vertex '" + label + "'");
        }
        return *v;
      }

      std::string text(NormalForm const& x) {
        return format(spec(), x);
      }

      void emit(json const& j, std::string const& human) {
        if (opts_.as_json) {
          out_ << j.dump(2) << "\n";
        } else {
          out_ << human;
        }
      }

      Options const& options() const {
        return opts_;
      }

     private:
      Options                     opts_;
      std::ostream&               out_;
      std::optional<Presentation> p_;
    };

    void require_count(std::vector<std::string> const& args, std::size_t lo,
                       std::size_t hi, std::string const& what) {
      if (args.size() < lo || args.size() > hi) {
        throw UsageError("expected " + what);
      }
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    int cmd_nf(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "at least one WORD");
      json        results = json::array();
      std::string human;
      for (auto const& a : args) {
        auto x = s.element(a);
        results.push_back({{"input", a}, {"normal_form", s.text(x)},
                           {"length", x.size()}});
        human += s.text(x) + "\n";
      }
      s.emit({{"results", results}}, human);
      return 0;
    }

    int cmd_mul(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "at least one WORD");
      NormalForm acc;
      for (auto const& x : s.elements(args)) {
        acc = multiply(s.spec(), acc, x);
      }
      s.emit({{"result", s.text(acc)}, {"length", acc.size()}}, s.text(acc) + "\n");
      return 0;
    }

    int cmd_inv(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, 1, "one WORD");
      auto x = invert(s.spec(), s.element(args[0]));
      s.emit({{"result", s.text(x)}, {"length", x.size()}}, s.text(x) + "\n");
      return 0;
    }

    int cmd_eq(Session& s, std::vector<std::string> const& args) {
      require_count(args, 2, 2, "two WORDs");
      bool eq = s.element(args[0]) == s.element(args[1]);
      s.emit({{"equal", eq}}, eq ? "true\n" : "false\n");
      return 0;
    }

    int cmd_order(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, 1, "one WORD");
      auto n = order(s.spec(), s.element(args[0]));
      s.emit({{"finite", n.has_value()},
              {"order", n ? exponent_json(*n) : json(nullptr)}},
             (n ? n->str() : std::string("infinite")) + "\n");
      return 0;
    }

    int cmd_set_of(Session& s, std::vector<std::string> const& args,
                   std::function<VertexSet(NormalForm const&)> const& f) {
      require_count(args, 1, 1, "one WORD");
      auto S = f(s.element(args[0]));
      s.emit({{"vertices", labels(s.spec(), S)}}, format(s.spec(), S) + "\n");
      return 0;
    }

    int cmd_retract(Session& s, std::vector<std::string> const& args) {
      require_count(args, 2, SIZE_MAX, "a vertex set and at least one WORD");
      auto        A       = s.vertex_set(args[0]);
      json        results = json::array();
      std::string human;
      for (std::size_t i = 1; i < args.size(); ++i) {
        auto r = retraction(s.spec(), A, s.element(args[i]));
        results.push_back({{"input", args[i]}, {"result", s.text(r)}});
        human += s.text(r) + "\n";
      }
      s.emit({{"vertices", labels(s.spec(), A)}, {"results", results}}, human);
      return 0;
    }

    int cmd_pc(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "at least one WORD");
      auto X  = s.elements(args);
      auto pc = parabolic_closure(s.spec(), X, s.options().budget);
      json j  = parabolic_json(s.spec(), pc.subgroup);
      j["budget_exhausted"] = pc.budget_exhausted;
      s.emit(j, format(s.spec(), pc.subgroup)
                    + (pc.budget_exhausted ? "  (budget exhausted)" : "") + "\n");
      return 0;
    }

    int cmd_esupp(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "at least one WORD");
      auto X  = s.elements(args);
      auto pc = parabolic_closure(s.spec(), X, s.options().budget);
      auto E  = pc.subgroup.base();
      s.emit({{"vertices", labels(s.spec(), E)},
              {"budget_exhausted", pc.budget_exhausted}},
             format(s.spec(), E)
                 + (pc.budget_exhausted ? "  (budget exhausted)" : "") + "\n");
      return 0;
    }

    int cmd_pint(Session& s, std::vector<std::string> const& args) {
      require_count(args, 2, 2, "two parabolics WORD@SET");
      auto I = intersect(s.spec(), s.parabolic(args[0]), s.parabolic(args[1]));
      s.emit(parabolic_json(s.spec(), I), format(s.spec(), I) + "\n");
      return 0;
    }

    int cmd_pnorm(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, 1, "one parabolic WORD@SET");
      auto P = s.parabolic(args[0]);
      if (P.is_trivial()) {
        throw UsageError("the normalizer of the trivial subgroup is not supported");
      }
      auto N = normalizer(s.spec(), P);
      s.emit(parabolic_json(s.spec(), N), format(s.spec(), N) + "\n");
      return 0;
    }

    int cmd_pmember(Session& s, std::vector<std::string> const& args) {
      require_count(args, 2, 2, "a WORD and a parabolic WORD@SET");
      bool in = element_in_parabolic(s.spec(), s.element(args[0]),
                                     s.parabolic(args[1]));
      s.emit({{"member", in}}, in ? "true\n" : "false\n");
      return 0;
    }

    std::string order_text(CyclicOrder const& o) {
      return o.is_finite() ? "Z/" + o.order().str() : std::string("Z");
    }

    int cmd_kernel(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "a VERTEX and optional WORDs");
      auto const& p = s.spec();
      auto const  a = s.vertex(args[0]);
      auto        k = kernel_presentation(p, a);
      auto        X = s.elements({args.begin() + 1, args.end()});

      json        images = json::array();
      std::string image_lines;
      for (std::size_t i = 0; i < X.size(); ++i) {
        if (vertex_projection(p, X[i], a) != 0) {
          throw UsageError("'" + args[i + 1] + "' is not in the kernel of the "
                           "retraction onto " + p.label(a));
        }
        auto y = psi(k, X[i]);
        auto d = k.delta_presentation();
        images.push_back({{"input", args[i + 1]},
                          {"normal_form", s.text(X[i])},
                          {"psi", format(d, y)},
                          {"length", X[i].size()},
                          {"psi_length", y.size()}});
        image_lines += "psi(" + s.text(X[i]) + ") = " + format(d, y) + "\n";
      }

      auto const d     = k.delta_presentation();
      auto const total = k.full_size();
      json       verts = json::array();
      json       edges = json::array();
      std::string human = "kernel of the retraction onto " + p.label(a) + " ("
                          + order_text(p.order(a)) + ")\n";
      human += "shared " + format(p, k.shared_vertices()) + "\n";
      human += "coset " + format(p, k.coset_vertices()) + "\n";
      if (total) {
        human += "census: " + std::to_string(d.size()) + " vertices, "
                 + std::to_string(d.graph().number_of_edges()) + " edges\n";
      } else {
        human += "census: infinite; realized " + std::to_string(d.size())
                 + " vertices, " + std::to_string(d.graph().number_of_edges())
                 + " edges\n";
      }
      for (vertex_type v = 0; v < d.size(); ++v) {
        auto dv = k.vertex(v);
        bool shared = dv.kind == DeltaVertex::Kind::shared;
        verts.push_back({{"label", d.label(v)},
                         {"kind", shared ? "shared" : "coset"},
                         {"coset", exponent_json(dv.g)},
                         {"base", p.label(dv.u)},
                         {"group", order_text(d.order(v))}});
        human += "vertex " + d.label(v) + " " + order_text(d.order(v)) + "  "
                 + (shared ? "shared " + p.label(dv.u)
                           : "coset " + dv.g.str() + " " + p.label(dv.u))
                 + "\n";
      }
      for (auto [u, v] : d.graph().edges()) {
        edges.push_back({d.label(u), d.label(v)});
        human += "edge " + d.label(u) + " " + d.label(v) + "\n";
      }
      human += image_lines;
      s.emit({{"vertex", p.label(a)},
              {"shared", labels(p, k.shared_vertices())},
              {"coset", labels(p, k.coset_vertices())},
              {"finite", total.has_value()},
              {"census", {{"vertices", d.size()},
                          {"edges", d.graph().number_of_edges()}}},
              {"vertices", verts},
              {"edges", edges},
              {"images", images}},
             human);
      return 0;
    }

    int cmd_compress(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "at least one WORD");
      auto const& p   = s.spec();
      auto const  X   = s.elements(args);
      auto const  res = compress(p, X, s.options().budget);

      auto images_of = [](Presentation const& q, std::vector<NormalForm> const& Y) {
        json out = json::array();
        for (auto const& y : Y) {
          out.push_back(format(q, y));
        }
        return out;
      };
      auto join = [](json const& arr) {
        std::string out;
        for (auto const& e : arr) {
          out += (out.empty() ? "" : ", ") + e.get<std::string>();
        }
        return out;
      };

      json                stages = json::array();
      std::string         human;
      Presentation const* prev = &p;
      for (std::size_t i = 0; i < res.log.size(); ++i) {
        auto const& st = res.log[i];
        json        j;
        human += "stage " + std::to_string(i + 1) + ": ";
        if (st.kind == CompressStage::Kind::projection) {
          j = {{"kind", "projection"},
               {"conjugator", format(*prev, st.conjugator)},
               {"essential_support", labels(*prev, st.essential_support)}};
          human += "project onto " + format(*prev, st.essential_support)
                   + " after conjugating by " + format(*prev, st.conjugator)
                   + "\n";
        } else {
          j = {{"kind", "kernel"}, {"vertex", prev->label(st.vertex)}};
          human += "kernel of the retraction onto " + prev->label(st.vertex)
                   + "\n";
        }
        j["spec"]   = format_spec(st.presentation);
        j["images"] = images_of(st.presentation, st.images);
        human += "  images: " + join(j["images"]) + "\n";
        stages.push_back(j);
        prev = &st.presentation;
      }
      auto final_images = images_of(res.presentation, res.images);
      human += "result:\n";
      std::istringstream spec_lines(format_spec(res.presentation));
      for (std::string line; std::getline(spec_lines, line);) {
        human += "  " + line + "\n";
      }
      human += "  images: " + join(final_images) + "\n";
      if (res.budget_exhausted) {
        human += "  (budget exhausted)\n";
      }
      s.emit({{"stages", stages},
              {"spec", format_spec(res.presentation)},
              {"images", final_images},
              {"budget_exhausted", res.budget_exhausted}},
             human);
      return 0;
    }

    int cmd_tree(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "a VERTEX and optional WORDs");
      auto const& p  = s.spec();
      auto const  v  = s.vertex(args[0]);
      if (p.size() < 2) {
        throw UsageError("splitting needs at least two vertices");
      }
      auto const  sp = split_at(p, v);
      std::string human = "splitting at " + p.label(v) + ": A = "
                          + format(p, sp.A) + ", B = " + format(p, sp.B)
                          + ", C = " + format(p, sp.C) + "\n";
      json j = {{"vertex", p.label(v)},
                {"A", labels(p, sp.A)},
                {"B", labels(p, sp.B)},
                {"C", labels(p, sp.C)},
                {"degenerate", sp.degenerate}};
      if (sp.degenerate) {
        human += "degenerate: " + p.label(v) + " is adjacent to every other "
                 "vertex\n";
        s.emit(j, human);
        return args.size() > 1 ? 2 : 0;
      }
      json elements = json::array();
      for (std::size_t i = 1; i < args.size(); ++i) {
        auto x    = s.element(args[i]);
        auto form = alternating_form(p, sp, x);
        auto act  = classify_action(p, sp, x);
        json factors = json::array();
        std::string ftext;
        for (auto const& f : form.factors) {
          std::string side = f.side == Side::A ? "A" : "B";
          factors.push_back({{"side", side}, {"element", s.text(f.element)}});
          ftext += " [" + side + ": " + s.text(f.element) + "]";
        }
        elements.push_back({{"input", args[i]},
                            {"normal_form", s.text(x)},
                            {"prefix", s.text(form.prefix)},
                            {"factors", factors},
                            {"action", act.elliptic ? "elliptic" : "hyperbolic"},
                            {"translation_length", act.translation_length}});
        human += s.text(x) + ": "
                 + (act.elliptic ? std::string("elliptic")
                                 : "hyperbolic, translation length "
                                       + std::to_string(act.translation_length))
                 + "\n  prefix " + s.text(form.prefix) + ";" + ftext + "\n";
      }
      j["elements"] = elements;
      s.emit(j, human);
      return 0;
    }

    int cmd_classify(Session& s, std::vector<std::string> const& args) {
      require_count(args, 1, SIZE_MAX, "at least one WORD");
      auto const& p = s.spec();
      auto const  X = s.elements(args);
      ClassifyOptions opts;
      opts.budget = s.options().budget;
      auto const v = classify(p, X, opts);

      json        j     = {{"verdict", to_string(v.kind)}};
      std::string human = to_string(v.kind);
      switch (v.kind) {
        case Verdict::Kind::finite_cyclic:
          j["order"] = exponent_json(v.order);
          human += "(" + v.order.str() + ")";
          break;
        case Verdict::Kind::free_abelian:
          j["rank"] = v.rank;
          human += "(" + std::to_string(v.rank) + ")";
          if (v.bound_limited) {
            j["bound_limited"] = true;
            human += " bound-limited";
          }
          break;
        default:
          break;
      }
      if (v.witness) {
        j["witness"] = {s.text(v.witness->first), s.text(v.witness->second)};
        human += " witness (" + s.text(v.witness->first) + ", "
                 + s.text(v.witness->second) + ")";
      }
      if (v.kind == Verdict::Kind::contains_free) {
        j["certified"] = v.certified;
        human += v.certified ? " certified" : " not certified";
      }
      if (!v.reason.empty()) {
        j["reason"] = v.reason;
        human += ": " + v.reason;
      }
      if (v.search) {
        json bounds = {{"L", v.search->candidate_length},
                       {"R", v.search->relation_length},
                       {"pairs_tested", v.search->pairs_tested}};
        human += "\n  search L = " + std::to_string(v.search->candidate_length)
                 + ", R = " + std::to_string(v.search->relation_length)
                 + ", pairs tested " + std::to_string(v.search->pairs_tested);
        if (v.search->generator_relation) {
          bounds["generator_relation"] = to_string(*v.search->generator_relation);
          human += "\n  generators satisfy "
                   + to_string(*v.search->generator_relation) + " = 1";
        }
        j["bounds"] = bounds;
      }
      if (v.budget_exhausted) {
        j["budget_exhausted"] = true;
        human += "\n  (budget exhausted)";
      }
      s.emit(j, human + "\n");
      return 0;
    }

    int cmd_selftest(Session& s, std::string const& suite,
                     std::optional<std::size_t> trials) {
      std::vector<std::string> names;
      if (suite.empty()) {
        names = suite_names();
      } else {
        auto all = suite_names();
        if (std::find(all.begin(), all.end(), suite) == all.end()) {
          throw UsageError("unknown suite '" + suite + "'");
        }
        names = {suite};
      }
      json        reports = json::array();
      std::string human;
      bool        ok = true;
      for (auto const& name : names) {
        auto r = check_suite(name, s.options().seed,
                             trials.value_or(default_trials(name)));
        ok     = ok && r.passed();
        reports.push_back({{"name", r.name},
                           {"seed", r.seed},
                           {"trials", r.trials},
                           {"passed", r.passed()},
                           {"failures", r.failures},
                           {"counterexample", r.counterexample
                                                  ? json(*r.counterexample)
                                                  : json(nullptr)},
                           {"notes", r.notes}});
        human += to_string(r);
      }
      s.emit({{"suites", reports}, {"passed", ok}}, human);
      return ok ? 0 : 1;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Graph products of cyclic groups: normal forms, parabolic "
                 "subgroups, kernels, splittings and subgroup verdicts"};
    app.name("gpc");
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--spec", opts.spec_path, "Presentation file");
    app.add_flag("--json", opts.as_json, "Emit JSON");
    app.add_option("--seed", opts.seed, "Seed for self-test suites");
    app.add_option("--budget", opts.budget, "Step budget for parabolic closures");

    using Handler = std::function<int(Session&, std::vector<std::string> const&)>;
    struct Entry {
      std::string              name;
      std::string              help;
      Handler                  handler;
      std::vector<std::string> args;
      CLI::App*                app = nullptr;
    };
    std::vector<Entry> entries = {
        {"nf", "Normal form of each WORD", cmd_nf},
        {"mul", "Product of the WORDs", cmd_mul},
        {"inv", "Inverse of WORD", cmd_inv},
        {"eq", "Whether two WORDs are equal", cmd_eq},
        {"order", "Order of WORD", cmd_order},
        {"supp", "Support of WORD",
         [](Session& s, auto const& a) {
           return cmd_set_of(s, a, [](NormalForm const& x) { return support(x); });
         }},
        {"fv", "Vertices that can start WORD",
         [](Session& s, auto const& a) {
           return cmd_set_of(s, a, [&s](NormalForm const& x) {
             return first_vertices(s.spec(), x);
           });
         }},
        {"lv", "Vertices that can end WORD",
         [](Session& s, auto const& a) {
           return cmd_set_of(s, a, [&s](NormalForm const& x) {
             return last_vertices(s.spec(), x);
           });
         }},
        {"retract", "Retraction onto SET of each WORD", cmd_retract},
        {"pc", "Parabolic closure of the WORDs", cmd_pc},
        {"esupp", "Essential support of the WORDs", cmd_esupp},
        {"pint", "Intersection of two parabolics WORD@SET", cmd_pint},
        {"pnorm", "Normalizer of a parabolic WORD@SET", cmd_pnorm},
        {"pmember", "Whether WORD lies in a parabolic WORD@SET", cmd_pmember},
        {"kernel", "Kernel of the retraction onto VERTEX, with psi of WORDs",
         cmd_kernel},
        {"compress", "Compress the subgroup generated by the WORDs", cmd_compress},
        {"tree", "Splitting at VERTEX and the action of each WORD", cmd_tree},
        {"classify", "Verdict for the subgroup generated by the WORDs",
         cmd_classify},
    };
    for (auto& e : entries) {
      e.app = app.add_subcommand(e.name, e.help);
      e.app->add_option("args", e.args, "Arguments");
    }

    std::string                suite;
    std::optional<std::size_t> trials;
    auto* selftest = app.add_subcommand("selftest", "Run the property suites");
    selftest->add_option("--suite", suite, "Run only this suite");
    selftest->add_option("--trials", trials, "Trials per suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    Session session(opts, out);
    try {
      if (selftest->parsed()) {
        return cmd_selftest(session, suite, trials);
      }
      for (auto& e : entries) {
        if (e.app->parsed()) {
          return e.handler(session, e.args);
        }
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace gpc::cli
