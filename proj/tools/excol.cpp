#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "excol/json_io.hpp"
#include "excol/ktheory.hpp"

namespace {

using namespace excol;

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

// Injection argument tag:l:markings, e.g. "F:2:empty" or "T:0:0,1,4".
Obj parse_inject(const std::string& text, const MarkingSplit& space) {
  const auto parts = split(text, ':');
  if (parts.size() != 3)
    throw CLI::ValidationError("--inject expects tag:l:markings");
  Obj o;
  if (parts[0] == "F")
    o.kind = ObjKind::Bundle;
  else if (parts[0] == "T")
    o.kind = ObjKind::Torsion;
  else
    throw CLI::ValidationError("--inject supports tags F and T");
  o.l = std::stoi(parts[1]);
  if (parts[2] != "empty") {
    std::vector<int> bits;
    for (const std::string& b : split(parts[2], ',')) {
      const int m = std::stoi(b);
      if (m < 0 || m >= space.n())
        throw CLI::ValidationError("--inject marking out of range");
      bits.push_back(m);
    }
    o.E = mask_of(bits);
  }
  return o;
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
}

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return Json::parse(f);
}

struct Selector {
  int p = 0;
  int q = 0;
  int n = 0;

  MarkingSplit space() const {
    if (n > 0) return {n, 0};
    return {p, q};
  }
};

void add_selector(CLI::App* cmd, Selector& sel) {
  auto* p = cmd->add_option("--p", sel.p, "heavy marking count");
  auto* n = cmd->add_option("--n", sel.n, "marking count, all heavy");
  cmd->add_option("--q", sel.q, "light marking count")->needs(p);
  n->excludes(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "equivariant exceptional collections on weighted quotients of "
      "products of lines"};
  app.require_subcommand(1);

  std::string variant = "1A";
  int threads = 0;
  app.add_option("--variant", variant, "collection variant")
      ->check(CLI::IsMember({"1A", "1B", "2A"}));
  app.add_option("--threads", threads,
                 "worker threads (1 forces the serial path)");

  Selector sel;
  std::string out_path, csv_path, in_path;
  std::vector<std::string> injects;
  std::string weights_csv;
  bool strong = false;
  int lmax = -1;

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "list the collection for a space");
  add_selector(cmd_enumerate, sel);
  cmd_enumerate->add_option("--out", out_path, "write JSON here instead");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "pairwise exceptionality verification for a space");
  add_selector(cmd_verify, sel);
  cmd_verify->add_option("--in", in_path, "verify this collection JSON");
  cmd_verify->add_option("--inject", injects,
                         "append an object (tag:l:markings) before checking");
  cmd_verify->add_flag("--strong", strong,
                       "require forward bundle morphisms in degree 0");
  cmd_verify->add_option("--out", out_path, "write the JSON report here");
  cmd_verify->add_option("--csv", csv_path, "write the verdict matrix here");

  CLI::App* cmd_rank = app.add_subcommand(
      "rank", "independent object count from the K-group walk");
  add_selector(cmd_rank, sel);
  cmd_rank->add_option("--weights", weights_csv,
                       "comma-separated rational weights, e.g. 1,1,1/3,1/3");

  CLI::App* cmd_orbits = app.add_subcommand(
      "orbits", "orbit structure and character decomposition");
  add_selector(cmd_orbits, sel);
  cmd_orbits->add_option("--out", out_path, "write JSON here instead");

  CLI::App* cmd_certify = app.add_subcommand(
      "certify", "build and replay a generation certificate");
  add_selector(cmd_certify, sel);
  cmd_certify->add_option("--lmax", lmax, "dual-label cutoff");
  cmd_certify->add_option("--out", out_path, "write JSON here instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const ExecPolicy policy =
      threads == 1 ? ExecPolicy::serial : default_policy();

  try {
    if (cmd_enumerate->parsed()) {
      const Collection c = enumerate_collection(sel.space(), variant);
      emit(collection_to_json(c), out_path);
      return 0;
    }

    if (cmd_verify->parsed()) {
      Collection c = in_path.empty()
                         ? enumerate_collection(sel.space(), variant)
                         : collection_from_json(load_json(in_path));
      for (const std::string& arg : injects)
        c.objects.push_back(parse_inject(arg, c.space));
      VerifyOptions opts;
      opts.check_strongness = strong;
      opts.policy = policy;
      const VerifyReport report = verify_collection(c, opts);
      emit(report_to_json(report), out_path);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw std::runtime_error("cannot write " + csv_path);
        f << report_to_csv(report);
      }
      return (report.fail_count > 0 || !report.order_ok) ? 1 : 0;
    }

    if (cmd_rank->parsed()) {
      if (!weights_csv.empty()) {
        std::vector<Rat> w;
        for (const std::string& part : split(weights_csv, ','))
          w.push_back(parse_rat(part));
        Json jw = Json::array();
        for (const std::string& part : split(weights_csv, ','))
          jw.push_back(part);
        std::ostringstream os;
        os << rank_hassett(w);
        emit(Json{{"weights", jw}, {"rank", os.str()}}, out_path);
      } else {
        std::ostringstream os;
        os << rank_mpq(sel.space().p, sel.space().q);
        emit(Json{{"space", space_to_json(sel.space())}, {"rank", os.str()}},
             out_path);
      }
      return 0;
    }

    if (cmd_orbits->parsed()) {
      const Collection c = enumerate_collection(sel.space(), variant);
      const OrbitReport orep = orbits(c);
      const Decomposition dec = decompose(c);
      emit(Json{{"space", space_to_json(c.space)},
                {"variant", c.variant},
                {"orbits", orbits_to_json(orep)},
                {"decomposition", decomposition_to_json(dec)}},
           out_path);
      const bool ok =
          dec.valid && orep.burnside_count == Int(orep.orbit_count);
      return ok ? 0 : 1;
    }

    if (cmd_certify->parsed()) {
      const MarkingSplit space = sel.space();
      const int cutoff = lmax >= 0 ? lmax : (space.q == 0 ? 6 : 4);
      const Certificate cert = certify(space, variant, cutoff);
      const CertCheck chk = check_certificate(cert);
      emit(Json{{"certificate", certificate_to_json(cert)},
                {"check",
                 Json{{"ok", chk.ok},
                      {"nodes_checked", chk.nodes_checked},
                      {"moves_checked", chk.moves_checked},
                      {"detail", chk.detail}}}},
           out_path);
      return chk.ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
