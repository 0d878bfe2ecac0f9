#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "biframe/builders.hpp"
#include "biframe/density.hpp"
#include "biframe/dot.hpp"
#include "biframe/error.hpp"
#include "biframe/json_io.hpp"
#include "biframe/subbilocale.hpp"
#include "biframe/verification.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace biframe;

namespace {

struct Opts {
  std::string out;
  bool dot = false;
  bool unicode = false;
  int cap = 24;
  std::string filter;
  std::string data;
};

std::string show(const Opts& o, const std::string& label) {
  return o.unicode ? unicode_label(label) : label;
}

FramePtr resolve_frame(const std::string& id) {
  if (id.rfind("frame:", 0) == 0) return build_frame(id);
  if (fs::exists(id)) return frame_from_json_text(read_file(id));
  return build_frame(id);
}

BiframePtr resolve_biframe(const std::string& id) {
  if (id.rfind("biframe:", 0) == 0) return build_biframe(id);
  if (fs::exists(id)) return biframe_from_json_text(read_file(id));
  return build_biframe(id);
}

nlohmann::json parse_hom_file(const std::string& path) {
  if (!fs::exists(path)) throw Error(ErrorKind::BadInput, "no such file '" + path + "'");
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, path + ": " + e.what());
  }
}

FrameHom load_frame_hom(const std::string& path) {
  const auto j = parse_hom_file(path);
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    throw Error(ErrorKind::BadInput, path + ": hom json needs \"dom\", \"cod\", \"map\"");
  FramePtr dom = resolve_frame(j.at("dom").get<std::string>());
  FramePtr cod = resolve_frame(j.at("cod").get<std::string>());
  return validate_hom(std::move(dom), std::move(cod), j.at("map").get<std::vector<int>>());
}

BiframeHom load_biframe_hom(const std::string& path) {
  const auto j = parse_hom_file(path);
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("map"))
    throw Error(ErrorKind::BadInput, path + ": hom json needs \"dom\", \"cod\", \"map\"");
  BiframePtr dom = resolve_biframe(j.at("dom").get<std::string>());
  BiframePtr cod = resolve_biframe(j.at("cod").get<std::string>());
  FrameHom f0 = validate_hom(dom->ambient(), cod->ambient(),
                             j.at("map").get<std::vector<int>>());
  return validate_biframe_hom(std::move(dom), std::move(cod), std::move(f0));
}

void emit(const Opts& o, const std::string& stem, const std::string& json_text,
          const FinPoset* diagram) {
  if (o.out.empty()) return;
  fs::create_directories(o.out);
  write_file(o.out + "/" + stem + ".json", json_text);
  if (o.dot && diagram)
    write_file(o.out + "/" + stem + ".dot", to_dot(*diagram, stem, o.unicode));
}

int cmd_build(const Opts& o, const std::string& id) {
  if (id.rfind("biframe:", 0) == 0 ||
      (fs::exists(id) && read_file(id).find("\"ambient\"") != std::string::npos)) {
    BiframePtr l = resolve_biframe(id);
    std::cout << "biframe: ambient " << l->ambient()->size() << " elements, components "
              << l->component(1).size() << " and " << l->component(2).size() << "\n";
    emit(o, "build", biframe_to_json_text(*l), &l->ambient()->poset());
  } else {
    FramePtr f = resolve_frame(id);
    std::cout << "frame: " << f->size() << " elements\n";
    emit(o, "build", frame_to_json_text(*f), &f->poset());
  }
  return 0;
}

int cmd_coproduct(const Opts& o, const std::string& a, const std::string& b) {
  Coproduct cp = coproduct(resolve_frame(a), resolve_frame(b), o.cap);
  std::cout << "coproduct: " << cp.frame->size() << " elements\n";
  emit(o, "coproduct", frame_to_json_text(*cp.frame), &cp.frame->poset());
  return 0;
}

int cmd_sublocales(const Opts& o, const std::string& id) {
  SublocaleLattice s = sublocale_lattice(resolve_frame(id), o.cap);
  FinPoset p = s.poset();
  std::cout << s.kernels.size() << " sublocales\n";
  emit(o, "sublocales", lattice_to_json_text(p), &p);
  return 0;
}

int cmd_subbilocales(const Opts& o, const std::string& id) {
  SubbilocaleLattice s = subbilocale_lattice(resolve_biframe(id), o.cap);
  FinPoset p = s.poset();
  LatticeAnalysis a = analyze(p);
  std::cout << s.kernels.size() << " subbilocales, ";
  if (a.distributive) {
    std::cout << "distributive\n";
  } else {
    std::cout << "not distributive, N5 witness:";
    for (int x : *a.pentagon) std::cout << " " << show(o, p.label(x));
    std::cout << "\n";
  }
  emit(o, "subbilocales", lattice_to_json_text(p), &p);
  return 0;
}

int cmd_booleanize(const Opts& o, const std::string& id) {
  if (id.rfind("biframe:", 0) == 0 ||
      (fs::exists(id) && read_file(id).find("\"ambient\"") != std::string::npos)) {
    BiframePtr l = resolve_biframe(id);
    BiframeBooleanization b = least_dense_subbilocale(l);
    SubbilocaleLattice s = subbilocale_lattice(l, o.cap);
    const int at = s.find(b.kernel);
    std::cout << "ambient size " << b.least_dense.quotient_biframe->ambient()->size()
              << ", kernel " << show(o, at >= 0 ? s.labels[at] : std::string("?")) << "\n";
    emit(o, "booleanize", biframe_to_json_text(*b.least_dense.quotient_biframe),
         &b.least_dense.quotient_biframe->ambient()->poset());
  } else {
    Booleanization b = booleanization_frame(resolve_frame(id));
    std::cout << "booleanized frame has " << b.booleanized->size() << " elements\n";
    emit(o, "booleanize", frame_to_json_text(*b.booleanized), &b.booleanized->poset());
  }
  return 0;
}

int cmd_factorize(const Opts& o, const std::string& path) {
  BiframeHom f = load_biframe_hom(path);
  Factorization fac = factorize(f);
  std::cout << "factored through " << fac.mid->ambient()->size()
            << " elements; extremal epi part " << (is_extremal_epi(fac.fbar) ? "ok" : "BAD")
            << ", mono part " << (is_monic(fac.embed) ? "ok" : "BAD") << "\n";
  emit(o, "factorize", biframe_to_json_text(*fac.mid), &fac.mid->ambient()->poset());
  return 0;
}

int cmd_extremal(const Opts&, const std::string& path) {
  BiframeHom f = load_biframe_hom(path);
  std::cout << (is_extremal_epi(f) ? "extremal epimorphism"
                                   : "not an extremal epimorphism")
            << "\n";
  return 0;
}

int cmd_skeletal(const Opts&, const std::string& path) {
  BiframeHom f = load_biframe_hom(path);
  std::cout << (skeletal_check(f) ? "skeletal" : "not skeletal") << "\n";
  return 0;
}

int cmd_pushout(const Opts& o, const std::string& fp, const std::string& gp) {
  FrameHom f = load_frame_hom(fp);
  FrameHom g = load_frame_hom(gp);
  if (f.dom != g.dom && !(f.dom->poset() == g.dom->poset()))
    throw Error(ErrorKind::BadInput, "span maps must share a domain");
  if (f.dom != g.dom) g.dom = f.dom;
  PushoutSquare sq = pushout(f, g, o.cap);
  std::cout << "pushout corner: " << sq.corner()->size() << " elements\n";
  emit(o, "pushout", frame_to_json_text(*sq.corner()), &sq.corner()->poset());
  return 0;
}

int cmd_verify(const Opts& o) {
  VerifyOptions vo;
  vo.data_dir = o.data;
  if (vo.data_dir.empty())
    if (const char* e = std::getenv("BIFRAME_DATA")) vo.data_dir = e;
  vo.filter = o.filter;
  const auto rs = run_verification(vo);
  std::cout << format_report(rs);
  return all_passed(rs) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite biframe toolkit"};
  app.require_subcommand(1);

  Opts o;
  if (const char* e = std::getenv("BIFRAME_CAP")) o.cap = std::atoi(e);
  app.add_option("--out", o.out, "directory for JSON/DOT artifacts");
  app.add_flag("--dot", o.dot, "also write DOT diagrams");
  app.add_flag("--unicode", o.unicode, "render labels with the usual glyphs");
  app.add_option("--cap", o.cap, "size cap for enumerations");
  app.add_option("--filter", o.filter, "verify-paper: run only criteria with this tag");
  app.add_option("--data", o.data, "verify-paper: directory with the reference diagrams");

  std::string arg1, arg2;
  auto* build = app.add_subcommand("build", "validate a named or JSON object");
  build->add_option("object", arg1)->required();
  auto* cop = app.add_subcommand("coproduct", "coproduct of two frames");
  cop->add_option("left", arg1)->required();
  cop->add_option("right", arg2)->required();
  auto* subl = app.add_subcommand("sublocales", "lattice of sublocales of a frame");
  subl->add_option("frame", arg1)->required();
  auto* subb = app.add_subcommand("subbilocales", "lattice of subbilocales of a biframe");
  subb->add_option("biframe", arg1)->required();
  auto* boo = app.add_subcommand("booleanize", "least dense quotient of a frame or biframe");
  boo->add_option("object", arg1)->required();
  auto* fac = app.add_subcommand("factorize", "extremal epi-mono factorization of a hom");
  fac->add_option("hom", arg1)->required();
  auto* ext = app.add_subcommand("extremal-check", "test a biframe hom for extremal epi");
  ext->add_option("hom", arg1)->required();
  auto* ske = app.add_subcommand("skeletal-check", "test a biframe hom for skeletality");
  ske->add_option("hom", arg1)->required();
  auto* pus = app.add_subcommand("pushout", "pushout of a span of frame homs");
  pus->add_option("f", arg1)->required();
  pus->add_option("g", arg2)->required();
  auto* ver = app.add_subcommand("verify-paper", "run the verification suite");

  // global flags may follow the subcommand
  for (CLI::App* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(o, arg1);
    if (cop->parsed()) return cmd_coproduct(o, arg1, arg2);
    if (subl->parsed()) return cmd_sublocales(o, arg1);
    if (subb->parsed()) return cmd_subbilocales(o, arg1);
    if (boo->parsed()) return cmd_booleanize(o, arg1);
    if (fac->parsed()) return cmd_factorize(o, arg1);
    if (ext->parsed()) return cmd_extremal(o, arg1);
    if (ske->parsed()) return cmd_skeletal(o, arg1);
    if (pus->parsed()) return cmd_pushout(o, arg1, arg2);
    if (ver->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
