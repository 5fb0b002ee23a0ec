#include "weldkit/cli.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weldkit/codec.hpp"
#include "weldkit/fiberwise.hpp"
#include "weldkit/invariants.hpp"
#include "weldkit/render.hpp"
#include "weldkit/surface.hpp"

namespace weld {
namespace {

// Failure that ends the run with a message and an exit status.
struct Failure {
  int status;
  std::string message;
};

struct Input {
  std::string label;  // path as given, for messages
  std::string text;
};

Input read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return {"<stdin>", buf.str()};
  }
  std::ifstream in(path);
  if (!in) throw Failure{kExitDomain, path + ": cannot read file"};
  buf << in.rdbuf();
  return {path, buf.str()};
}

bool has_records(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 7, "diagram") == 0;
  }
  return false;
}

std::vector<NamedDiagram> load_diagrams(const std::vector<std::string>& paths) {
  std::vector<NamedDiagram> out;
  for (const auto& path : paths) {
    const Input in = read_input(path);
    try {
      if (has_records(in.text)) {
        for (auto& nd : parse_diagram_file(in.text)) out.push_back(std::move(nd));
      } else {
        const std::string name =
            path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
        out.push_back({name, parse_diagram(in.text)});
      }
    } catch (const ParseError& e) {
      throw Failure{kExitDomain, in.label + ": " + e.what()};
    }
  }
  return out;
}

// Rows of (subject, key, value), printed as text blocks or as TSV.
class Report {
 public:
  void add(const std::string& subject, const std::string& key, const std::string& value) {
    rows_.push_back({subject, key, value});
  }

  void write(std::ostream& os, ReportFormat f) const {
    if (f == ReportFormat::Tsv) {
      os << "subject\tkey\tvalue\n";
      for (const auto& r : rows_) os << r[0] << '\t' << r[1] << '\t' << r[2] << '\n';
      return;
    }
    const std::string* current = nullptr;
    for (const auto& r : rows_) {
      if (!current || *current != r[0]) {
        os << "[" << r[0] << "]\n";
        current = &r[0];
      }
      os << r[1] << "=" << r[2] << '\n';
    }
  }

 private:
  std::vector<std::array<std::string, 3>> rows_;
};

std::vector<FiniteGroupTable> panel_of(const RunConfig& c) {
  if (c.groups.empty()) return default_group_panel();
  try {
    return load_group_panel(c.groups);
  } catch (const GroupTableError& e) {
    throw Failure{kExitDomain, e.what()};
  }
}

void add_hom_counts(Report& r, const std::string& name, const GroupPresentation& p,
                    const std::vector<FiniteGroupTable>& panel) {
  for (const auto& g : panel) {
    std::string value;
    try {
      value = std::to_string(hom_count(p, g));
    } catch (const BudgetExceeded&) {
      value = "budget-exceeded";
    }
    r.add(name, "hom_count[" + g.name() + "]", value);
  }
}

void require_inputs(const RunConfig& c, std::size_t n) {
  if (c.inputs.size() != n)
    throw Failure{kExitUsage, "expected " + std::to_string(n) + " input file(s)"};
}

PlanarDiagram single_diagram(const std::vector<NamedDiagram>& ds, const std::string& what) {
  if (ds.size() != 1) throw Failure{kExitUsage, what + " needs exactly one diagram"};
  return ds.front().diagram;
}

int report_diagrams(const RunConfig& c, std::ostream& os) {
  if (c.inputs.empty()) throw Failure{kExitUsage, "no input files"};
  const auto diagrams = load_diagrams(c.inputs);
  Report r;
  for (const auto& [name, d] : diagrams) {
    switch (c.subcommand) {
      case Subcommand::Parse:
        r.add(name, "word", to_word(d));
        r.add(name, "canonical_code", canonical_code(d));
        r.add(name, "classical_crossings", std::to_string(d.classical_count()));
        r.add(name, "virtual_crossings", std::to_string(d.virtual_count()));
        break;
      case Subcommand::Invariants: {
        const ParityProfile pp = parity_profile(d);
        r.add(name, "virtual_parity", std::to_string(pp.virtual_parity));
        r.add(name, "classical_parity", std::to_string(pp.classical_parity));
        r.add(name, "mixed_parity", std::to_string(pp.mixed_parity));
        r.add(name, "whitney_degree", std::to_string(whitney_degree(d)));
        add_hom_counts(r, name, wirtinger_presentation(d), panel_of(c));
        r.add(name, "alexander", alexander_polynomial(d).to_string());
        break;
      }
      case Subcommand::Surface: {
        const SurfaceCurve sc = representing_surface(d);
        const SurfaceCounts n = surface_counts(sc);
        r.add(name, "genus", std::to_string(surface_genus(sc)));
        r.add(name, "V", std::to_string(n.vertices));
        r.add(name, "E", std::to_string(n.edges));
        r.add(name, "F", std::to_string(n.faces));
        r.add(name, "curve_vertices", std::to_string(sc.curve_vertices));
        break;
      }
      case Subcommand::Census: {
        const FiberCensus fc = fiber_census(d);
        for (const auto& s : fc.strata)
          r.add(name, std::string(to_string(s.stratum)),
                std::string(to_string(s.section)) + " x" + std::to_string(s.count));
        for (const auto& np : fc.nested)
          r.add(name, "nested[" + std::to_string(np.crossing) + "]",
                "inner_pass=" + std::to_string(np.inner_pass));
        break;
      }
      case Subcommand::HomCount: {
        const GroupPresentation p = wirtinger_presentation(d);
        r.add(name, "presentation", to_string(p));
        add_hom_counts(r, name, p, panel_of(c));
        break;
      }
      default:
        break;
    }
  }
  r.write(os, c.format);
  return kExitOk;
}

int run_search(const RunConfig& c, std::ostream& os, std::ostream& err) {
  if (c.inputs.empty() || c.inputs.size() > 2) throw Failure{kExitUsage, "search needs two diagrams"};
  const auto ds = load_diagrams(c.inputs);
  if (ds.size() != 2) throw Failure{kExitUsage, "search needs two diagrams"};
  const MoveSet moves(c.theory);
  const SearchResult res = bfs_path(ds[0].diagram, ds[1].diagram, moves, c.limits, panel_of(c));
  switch (res.status) {
    case SearchStatus::Found: {
      const Movie m = path_to_movie(ds[0].diagram, *res.path, ds[0].name + "_to_" + ds[1].name);
      os << "# theory=" << to_string(c.theory) << " length=" << res.path->length()
         << " visited=" << res.visited << '\n'
         << serialize_movie(m);
      return kExitOk;
    }
    case SearchStatus::Distinguished:
      err << "distinguished invariant=" << res.witness->invariant << " a=" << res.witness->value_a
          << " b=" << res.witness->value_b << '\n';
      return kExitDomain;
    case SearchStatus::Exhausted:
      err << "exhausted visited=" << res.visited << " (limits reached, no path found)\n";
      return kExitDomain;
  }
  return kExitDomain;
}

int run_movie_check(const RunConfig& c, std::ostream& os) {
  require_inputs(c, 1);
  const Input in = read_input(c.inputs.front());
  Movie m;
  try {
    m = parse_movie(in.text);
  } catch (const ParseError& e) {
    throw Failure{kExitDomain, in.label + ": " + e.what()};
  }
  const Verdict v = check_movie(m, MoveSet(c.theory));
  if (v.accepted) {
    os << "ACCEPT\n";
    return kExitOk;
  }
  os << "REJECT frame=" << v.first_violation->frame
     << " reason=" << to_string(v.first_violation->reason) << '\n';
  return kExitReject;
}

int dispatch(const RunConfig& c, std::ostream& os, std::ostream& err) {
  switch (c.subcommand) {
    case Subcommand::Search:
      return run_search(c, os, err);
    case Subcommand::MovieCheck:
      return run_movie_check(c, os);
    case Subcommand::Render:
      require_inputs(c, 1);
      os << render_svg(single_diagram(load_diagrams(c.inputs), "render"));
      return kExitOk;
    default:
      return report_diagrams(c, os);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.out) return dispatch(config, out, err);
    std::ostringstream buf;
    const int status = dispatch(config, buf, err);
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) throw Failure{kExitDomain, *config.out + ": cannot write file"};
    file << buf.str();
    return status;
  } catch (const Failure& f) {
    err << "weldkit: " << f.message << '\n';
    return f.status;
  }
}

}  // namespace weld
