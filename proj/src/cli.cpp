#include "mps/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "mps/error.hpp"
#include "mps/ideal.hpp"
#include "mps/job.hpp"
#include "mps/map_germ.hpp"
#include "mps/multipoint.hpp"
#include "mps/parser.hpp"
#include "mps/result.hpp"

namespace mps::cli {

namespace {

struct Options {
  std::string verb;
  std::vector<std::string> paths;
  std::optional<unsigned> k;
  std::optional<std::string> order;
  std::optional<std::string> style;
  std::string format = "json";
  std::string out;
  std::string vars;
};

const std::vector<std::string> kJobVerbs = {"d2",    "hk",   "ik",   "strict",  "slice-d2",
                                            "sigma", "corank", "dims", "compare"};

NameStyle parse_style(const std::string& s) {
  if (s == "primes") return NameStyle::Primes;
  if (s == "at") return NameStyle::At;
  throw Error(ErrorKind::InvalidArgument, "--style must be 'primes' or 'at'");
}

std::vector<std::string> render_all(const std::vector<Polynomial>& ps, NameStyle style) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(render_poly(p, style));
  return out;
}

ResultDocument ideal_document(const Ideal& I, NameStyle style) {
  ResultDocument doc;
  doc.vars = I.table().names(style);
  doc.order = I.ring()->order.name();
  doc.generators = render_all(I.generators(), style);
  doc.reduced_groebner = render_all(I.groebner_basis().generators, style);
  doc.dimension = dimension(I);
  return doc;
}

ResultDocument germ_document(const MapGerm& f, NameStyle style) {
  ResultDocument doc;
  doc.vars = f.table().names(style);
  doc.order = f.ring()->order.name();
  return doc;
}

ResultDocument run_job_verb(const Options& o) {
  JobSpec job = load_job(o.paths[0]);
  if (o.order) {
    MonomialOrder::from_name(*o.order);
    job.options.order = *o.order;
  }
  const unsigned k = o.k.value_or(job.options.k);
  const NameStyle style = o.style ? parse_style(*o.style) : job.options.style;
  const MapGerm f = MapGerm::from_job(job);
  const auto n = static_cast<std::int64_t>(f.source_dim());
  const auto p = static_cast<std::int64_t>(f.target_dim());

  if (o.verb == "d2") return ideal_document(mond_double_ideal(f), style);
  if (o.verb == "hk") return ideal_document(h_ideal(f, k), style);
  if (o.verb == "ik") return ideal_document(divided_difference_ideal(f, k), style);
  if (o.verb == "strict") return ideal_document(strict_saturation_ideal(f, k), style);
  if (o.verb == "slice-d2") {
    if (!f.has_parameters()) throw Error(ErrorKind::NoParameters, "slice-d2 needs a job with params");
    return ideal_document(slice_params(strict_saturation_ideal(f, k)), style);
  }
  if (o.verb == "sigma") {
    ResultDocument doc = ideal_document(sigma_hat_ideal(f, k), style);
    doc.verdicts["expected_dim"] = expected_dims(n, p, k).sigma;
    return doc;
  }
  if (o.verb == "corank") {
    ResultDocument doc = germ_document(f, style);
    doc.verdicts["corank"] = corank_at_origin(f);
    return doc;
  }
  if (o.verb == "dims") {
    ResultDocument doc = germ_document(f, style);
    const ExpectedDims d = expected_dims(n, p, k);
    doc.verdicts["multiple_points"] = d.multiple_points;
    doc.verdicts["sigma"] = d.sigma;
    return doc;
  }
  // compare
  if (f.source_dim() > f.target_dim()) throw Error(ErrorKind::CorankUndefined, "compare needs n <= p");
  const Ideal I2 = mond_double_ideal(f);
  const Ideal H2 = h_ideal(f, 2);
  const ComparisonReport r = compare_d2_h2(f, I2, H2);
  ResultDocument doc;
  doc.vars = I2.table().names(style);
  doc.order = I2.ring()->order.name();
  doc.verdicts = {
      {"contains_I2_in_H2", r.contains_I2_in_H2},
      {"dim_H2", r.dim_H2},
      {"dim_I2", r.dim_I2},
      {"dim_sigma2hat", r.dim_sigma2hat},
      {"equal", r.equal},
      {"expected_dim", r.expected_dim},
      {"power_containment", r.power_containment},
      {"power_exponent", r.power_exponent},
      {"set_agreement", r.set_agreement},
      {"theorem_conditions_met", r.theorem_conditions_met},
  };
  return doc;
}

ResultDocument run_ideal_verb(const Options& o) {
  const MonomialOrder order = MonomialOrder::from_name(o.order.value_or("degrevlex"));
  const NameStyle style = parse_style(o.style.value_or("primes"));
  const bool binary = o.verb == "quotient" || o.verb == "saturate" || o.verb == "intersect";
  if (o.paths.size() != (binary ? 2u : 1u)) {
    throw Error(ErrorKind::InvalidArgument,
                "'" + o.verb + "' takes " + (binary ? "two ideal files" : "one ideal file"));
  }
  auto load = [&](const std::string& path) {
    IdealText t = load_ideal_file(path, order);
    return Ideal(t.ring, std::move(t.generators));
  };
  const Ideal I = load(o.paths[0]);
  if (binary) {
    const Ideal J = load(o.paths[1]);
    if (o.verb == "quotient") return ideal_document(quotient(I, J), style);
    if (o.verb == "saturate") return ideal_document(saturate(I, J), style);
    return ideal_document(intersect(I, J), style);
  }
  if (o.verb == "eliminate") {
    std::vector<std::size_t> indices;
    for (const auto& v : parse_variable_list(o.vars)) {
      std::string token = display_name(v, NameStyle::At);
      auto idx = resolve_variable(I.table(), token);
      if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + token + "' in --vars");
      indices.push_back(*idx);
    }
    if (indices.empty()) throw Error(ErrorKind::InvalidArgument, "eliminate needs --vars");
    return ideal_document(eliminate(I, indices), style);
  }
  return ideal_document(I, style);  // gb, dim
}

void configure(CLI::App& app, Options& o) {
  app.require_subcommand(1, 1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--style", o.style, "primes or at")->check(CLI::IsMember({"primes", "at"}));
    sub->add_option("--order", o.order, "lex, degrevlex or dp");
  };
  for (const auto& verb : kJobVerbs) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("job", o.paths, "job file")->required()->expected(1);
    sub->add_option("--k", o.k, "multiplicity k");
    add_common(sub);
  }
  for (const std::string verb : {"gb", "dim", "eliminate"}) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("ideal", o.paths, "ideal file")->required()->expected(1);
    if (verb == "eliminate") sub->add_option("--vars", o.vars, "variables to eliminate")->required();
    add_common(sub);
  }
  for (const std::string verb : {"quotient", "saturate", "intersect"}) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("ideals", o.paths, "two ideal files")->required()->expected(2);
    add_common(sub);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple point spaces of polynomial map germs", "mps"};
  Options o;
  configure(app, o);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
  o.verb = app.get_subcommands().front()->get_name();

  try {
    const bool job_verb = std::find(kJobVerbs.begin(), kJobVerbs.end(), o.verb) != kJobVerbs.end();
    const ResultDocument doc = job_verb ? run_job_verb(o) : run_ideal_verb(o);
    const std::string text = emit_result(doc, o.format == "text" ? OutputFormat::Text : OutputFormat::Json);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file || !(file << text)) throw Error(ErrorKind::IoError, "cannot write '" + o.out + "'");
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
  return 0;
}

}  // namespace mps::cli
