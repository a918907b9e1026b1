#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "sring/autsearch.hpp"
#include "sring/constructions.hpp"
#include "sring/enumerate.hpp"
#include "sring/io.hpp"
#include "sring/repro.hpp"
#include "sring/schurity.hpp"

namespace sring::cli {

namespace {

struct Options {
  std::string group;
  std::vector<std::string> partitions;
  std::string out;
  int p = 0;
  bool expect_schurian = false;
  int threads = 1;
  std::string instance;
};

PartitionFile load_partition(const Options& o, std::size_t index = 0) {
  if (o.partitions.size() <= index) fail(ErrorKind::kInvalidArgument, "--partition is required");
  PartitionFile pf = read_partition_file(o.partitions[index]);
  if (!o.group.empty() && !(AbelianGroup::parse(o.group) == pf.group)) {
    fail(ErrorKind::kMismatchedGroups,
         "--group " + o.group + " differs from the file's group " + pf.group.literal());
  }
  return pf;
}

SRing load_sring(const Options& o, std::size_t index = 0) {
  const PartitionFile pf = load_partition(o, index);
  return SRing::validate(pf.group, pf.classes);
}

AbelianGroup require_group(const Options& o) {
  if (o.group.empty()) fail(ErrorKind::kInvalidArgument, "--group is required");
  return AbelianGroup::parse(o.group);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_validate(const Options& o, std::ostream& out) {
  const SRing a = load_sring(o);
  Json j;
  j["valid"] = true;
  j["group"] = a.group().literal();
  j["rank"] = a.rank();
  j["classes"] = partition_json(a)["classes"];
  emit(out, j);
  return 0;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const SRing a = load_sring(o);
  const AutResult r = aut_search(a);
  Json j;
  j["aut_order"] = r.group.order().str();
  j["stabilizer_order"] = r.stabilizer.order().str();
  j["base"] = r.group.base();
  Json gens = Json::array();
  for (const auto& g : r.stabilizer_generators) gens.push_back(permutation_json(g));
  j["stabilizer_generators"] = std::move(gens);
  j["search_nodes"] = r.search_nodes;
  emit(out, j);
  return 0;
}

int cmd_schurian(const Options& o, std::ostream& out) {
  const SchurReport r = is_schurian(load_sring(o));
  emit(out, schur_report_json(r));
  return (o.expect_schurian && !r.schurian) ? 1 : 0;
}

int cmd_cyclotomic(const Options& o, std::ostream& out) {
  const CyclotomicReport r = is_cyclotomic(load_sring(o));
  Json j;
  j["cyclotomic"] = r.cyclotomic;
  j["class_stabilizer_order"] = r.class_stabilizer.size();
  emit(out, j);
  return 0;
}

int cmd_normal(const Options& o, std::ostream& out) {
  const SRing a = load_sring(o);
  const AutResult r = aut_search(a);
  Json j;
  j["normal"] = is_normal(a, r.group);
  j["aut_order"] = r.group.order().str();
  emit(out, j);
  return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
  emit(out, partition_json(dual(load_sring(o))));
  return 0;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  if (o.partitions.size() != 2) {
    fail(ErrorKind::kInvalidArgument, "tensor needs exactly two --partition files");
  }
  Options first = o;
  first.group.clear();
  emit(out, partition_json(tensor(load_sring(first, 0), load_sring(first, 1))));
  return 0;
}

int cmd_gwreath(const Options& o, std::ostream& out) {
  if (o.partitions.empty()) fail(ErrorKind::kInvalidArgument, "--partition <spec.json> is required");
  const WreathFile w = parse_wreath_spec(read_json_file(o.partitions[0]));
  emit(out, partition_json(generalized_wreath(w.group, w.spec)));
  return 0;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const PartitionFile pf = load_partition(o);
  emit(out, partition_json(sring_closure(pf.group, pf.classes)));
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Json j;
  j["tags"] = classify_e4cn(load_sring(o));
  emit(out, j);
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  EnumerateOptions eo;
  eo.threads = o.threads;
  const Catalog c = enumerate_srings(require_group(o), eo);
  if (o.out.empty()) {
    write_catalog(out, c);
    return 0;
  }
  std::ofstream file(o.out);
  if (!file) fail(ErrorKind::kInvalidArgument, "cannot write '" + o.out + "'");
  write_catalog(file, c);
  int nonschurian = 0;
  int reps = 0;
  for (const auto& e : c.entries) {
    nonschurian += e.schurian ? 0 : 1;
    reps += e.orbit_rep ? 1 : 0;
  }
  Json j;
  j["group"] = c.group.literal();
  j["count"] = c.entries.size();
  j["orbit_reps"] = reps;
  j["nonschurian"] = nonschurian;
  j["out"] = o.out;
  emit(out, j);
  return 0;
}

int cmd_repro(const Options& o, std::ostream& out) {
  ReproResult r;
  if (o.instance == "t2") {
    r = reproduce_t2(o.p == 0 ? 3 : o.p);
  } else if (o.instance == "t3") {
    r = reproduce_t3(o.p == 0 ? 5 : o.p);
  } else {
    fail(ErrorKind::kInvalidArgument, "unknown instance '" + o.instance + "' (t2 or t3)");
  }
  emit(out, repro_json(r));
  if (!r.matches) return 1;
  return (o.expect_schurian && r.schur && !r.schur->schurian) ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur rings over finite abelian groups"};
  app.name("sring");
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<int(const Options&, std::ostream&)>;
  std::map<CLI::App*, Handler> handlers;
  auto verb = [&](const std::string& name, const std::string& help, Handler h, bool group,
                  bool partition) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (group) sub->add_option("--group", o.group, "group literal, e.g. 8x2x3");
    if (partition) sub->add_option("--partition", o.partitions, "partition JSON file");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    handlers[sub] = std::move(h);
    return sub;
  };
  verb("validate", "validate a partition as an S-ring", cmd_validate, true, true);
  verb("aut", "automorphism group of an S-ring", cmd_aut, true, true);
  verb("schurian", "decide schurity", cmd_schurian, true, true)
      ->add_flag("--expect-schurian", o.expect_schurian, "exit 1 if nonschurian");
  verb("cyclotomic", "decide cyclotomicity", cmd_cyclotomic, true, true);
  verb("normal", "decide normality", cmd_normal, true, true);
  verb("dual", "dual S-ring", cmd_dual, true, true);
  verb("tensor", "tensor product of two S-rings", cmd_tensor, false, true);
  verb("gwreath", "generalized wreath product from a spec file", cmd_gwreath, false, true);
  verb("closure", "coarsest S-ring refining a partition", cmd_closure, true, true);
  verb("classify", "E4 x Cn clause tags", cmd_classify, true, true);
  CLI::App* en = verb("enumerate", "all S-rings over a group", cmd_enumerate, true, false);
  en->add_option("--out", o.out, "catalog JSONL output file");
  CLI::App* rp = verb("repro", "build the t2 or t3 instance", cmd_repro, false, false);
  rp->add_option("instance", o.instance, "t2 or t3")->required();
  rp->add_option("--p", o.p, "prime parameter");
  rp->add_flag("--expect-schurian", o.expect_schurian, "exit 1 if nonschurian");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o, out);
    }
  } catch (const Error& e) {
    emit(out, error_json(e));
    err << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sring::cli
