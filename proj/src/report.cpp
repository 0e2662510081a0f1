#include "sygus/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sygus {

std::map<std::string, std::string> load_category_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");

  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line == "benchmark,category") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'benchmark,category'");
    std::string bench = line.substr(0, comma);
    std::string category = line.substr(comma + 1);
    if (!out.emplace(bench, category).second)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate benchmark '" +
                               bench + "'");
  }
  return out;
}

namespace {

std::string category_of(const std::map<std::string, std::string>& categories,
                        const std::string& bench) {
  auto it = categories.find(bench);
  return it == categories.end() ? "uncategorized" : it->second;
}

// Wall times display floor-rounded to whole seconds; missing values as inf.
std::string time_cell(double seconds, bool present) {
  if (!present) return "inf";
  return std::to_string(static_cast<long long>(std::floor(seconds)));
}

std::string size_cell(std::size_t size, bool present) {
  if (!present || size > 1000) return "inf";
  return std::to_string(size);
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += ';';
    out += s;
  }
  return out;
}

struct CategoryCell {
  std::size_t solved = 0;
  std::size_t fastest = 0;
  std::size_t uniquely = 0;
};

std::string svg_charts(const std::vector<std::string>& category_order,
                       const std::vector<std::string>& solver_order,
                       const std::map<std::string, std::vector<const BenchmarkDetail*>>& by_cat,
                       const std::map<std::string, std::map<std::string, const RunRecord*>>&
                           solved_by_bench) {
  static const char* kColors[] = {"#3366cc", "#dc3912", "#ff9900", "#109618",
                                  "#990099", "#0099c6", "#dd4477", "#66aa00"};
  const int unit = 10;          // pixels per bucket step
  const int bar = 6;            // bar width per solver
  const int gap = 8;            // gap between benchmark groups
  const int axis_gap = 14;      // marker rows around the axis
  const int top = 26;           // per-chart title space
  const int time_h = 9 * unit;  // nine time buckets
  const int size_h = 6 * unit;  // six size buckets
  const int chart_h = top + time_h + 2 * axis_gap + size_h + 20;

  std::ostringstream body;
  int y0 = 10;
  int width = 320;
  for (const std::string& cat : category_order) {
    const auto& benches = by_cat.at(cat);
    int group = static_cast<int>(solver_order.size()) * bar + gap;
    width = std::max(width, 60 + static_cast<int>(benches.size()) * group + 20);

    int axis_y = y0 + top + time_h;
    body << "  <text x=\"10\" y=\"" << (y0 + 14) << "\" font-size=\"12\" font-weight=\"bold\">"
         << cat << "</text>\n";
    body << "  <line x1=\"50\" y1=\"" << axis_y << "\" x2=\"" << (width - 10) << "\" y2=\""
         << axis_y << "\" stroke=\"#444\"/>\n";

    for (std::size_t b = 0; b < benches.size(); b++) {
      const BenchmarkDetail& d = *benches[b];
      int x0 = 60 + static_cast<int>(b) * group;
      const auto& solved = solved_by_bench.at(d.benchmark_id);
      for (std::size_t s = 0; s < solver_order.size(); s++) {
        auto it = solved.find(solver_order[s]);
        if (it == solved.end()) continue;
        const RunRecord& r = *it->second;
        const char* color = kColors[s % (sizeof kColors / sizeof *kColors)];
        int x = x0 + static_cast<int>(s) * bar;

        int th = (time_bucket(r.wall_seconds) + 1) * unit;
        body << "  <rect x=\"" << x << "\" y=\"" << (axis_y - th) << "\" width=\"" << (bar - 1)
             << "\" height=\"" << th << "\" fill=\"" << color << "\"/>\n";
        if (std::find(d.fastest.begin(), d.fastest.end(), solver_order[s]) != d.fastest.end())
          body << "  <circle cx=\"" << (x + bar / 2) << "\" cy=\"" << (axis_y - th - 4)
               << "\" r=\"2\" fill=\"" << color << "\"/>\n";

        if (r.solution_size) {
          int sh = (size_bucket(*r.solution_size) + 1) * unit;
          int sy = axis_y + 2 * axis_gap;
          body << "  <rect x=\"" << x << "\" y=\"" << sy << "\" width=\"" << (bar - 1)
               << "\" height=\"" << sh << "\" fill=\"" << color << "\" opacity=\"0.6\"/>\n";
          if (std::find(d.smallest.begin(), d.smallest.end(), solver_order[s]) !=
              d.smallest.end())
            body << "  <circle cx=\"" << (x + bar / 2) << "\" cy=\"" << (sy + sh + 4)
                 << "\" r=\"2\" fill=\"" << color << "\"/>\n";
        }
      }
      body << "  <text x=\"" << x0 << "\" y=\"" << (axis_y + axis_gap - 3)
           << "\" font-size=\"8\">" << d.benchmark_id << "</text>\n";
    }
    y0 += chart_h;
  }

  // Legend.
  for (std::size_t s = 0; s < solver_order.size(); s++) {
    const char* color = kColors[s % (sizeof kColors / sizeof *kColors)];
    body << "  <rect x=\"10\" y=\"" << (y0 + static_cast<int>(s) * 16) << "\" width=\"12\""
         << " height=\"12\" fill=\"" << color << "\"/>\n";
    body << "  <text x=\"28\" y=\"" << (y0 + static_cast<int>(s) * 16 + 10)
         << "\" font-size=\"11\">" << solver_order[s] << "</text>\n";
  }
  int height = y0 + static_cast<int>(solver_order.size()) * 16 + 10;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"sans-serif\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body.str() << "</svg>\n";
  return out.str();
}

} // namespace

ReportBundle report(const std::vector<RunRecord>& records,
                    const std::map<std::string, std::string>& categories, bool with_svg) {
  Scoring sc = score(records);

  std::vector<std::string> solver_order;
  for (const ScoreCard& c : sc.cards) solver_order.push_back(c.solver_id);

  // Per (category, solver) tallies from the per-benchmark details.
  std::map<std::string, std::map<std::string, const RunRecord*>> solved_by_bench;
  for (const RunRecord& r : records)
    if (r.status == RunStatus::Solved) solved_by_bench[r.benchmark_id][r.solver_id] = &r;

  std::map<std::string, std::map<std::string, CategoryCell>> table;
  std::map<std::string, std::vector<const BenchmarkDetail*>> by_cat;
  std::vector<std::string> category_order;
  for (const BenchmarkDetail& d : sc.details) {
    std::string cat = category_of(categories, d.benchmark_id);
    if (by_cat.find(cat) == by_cat.end()) category_order.push_back(cat);
    by_cat[cat].push_back(&d);

    auto solved = solved_by_bench.find(d.benchmark_id);
    if (solved != solved_by_bench.end()) {
      for (const auto& [solver, rec] : solved->second) {
        CategoryCell& cell = table[cat][solver];
        cell.solved++;
        if (d.solver_count == 1) cell.uniquely++;
        if (std::find(d.fastest.begin(), d.fastest.end(), solver) != d.fastest.end())
          cell.fastest++;
      }
    }
  }
  std::sort(category_order.begin(), category_order.end());

  ReportBundle out;

  // Category table, one row per category plus a Total row; cells read
  // solved/fastest/uniquely.
  {
    std::size_t cat_width = std::strlen("category");
    for (const std::string& c : category_order) cat_width = std::max(cat_width, c.size());
    std::size_t cell_width = 0;
    for (const std::string& s : solver_order) cell_width = std::max(cell_width, s.size());
    cell_width = std::max<std::size_t>(cell_width, 12);

    std::ostringstream text, csv;
    csv << "category,solver,solved,fastest,uniquely\n";
    text << std::left << std::setw(static_cast<int>(cat_width)) << "category";
    for (const std::string& s : solver_order)
      text << "  " << std::setw(static_cast<int>(cell_width)) << s;
    text << '\n';

    std::map<std::string, CategoryCell> totals;
    auto emit_row = [&](const std::string& label,
                        const std::map<std::string, CategoryCell>& row) {
      text << std::left << std::setw(static_cast<int>(cat_width)) << label;
      for (const std::string& s : solver_order) {
        CategoryCell cell;
        auto it = row.find(s);
        if (it != row.end()) cell = it->second;
        std::string mark = std::to_string(cell.solved) + "/" + std::to_string(cell.fastest) +
                           "/" + std::to_string(cell.uniquely);
        text << "  " << std::setw(static_cast<int>(cell_width)) << mark;
        csv << label << ',' << s << ',' << cell.solved << ',' << cell.fastest << ','
            << cell.uniquely << '\n';
      }
      text << '\n';
    };
    for (const std::string& cat : category_order) {
      emit_row(cat, table[cat]);
      for (const auto& [solver, cell] : table[cat]) {
        totals[solver].solved += cell.solved;
        totals[solver].fastest += cell.fastest;
        totals[solver].uniquely += cell.uniquely;
      }
    }
    emit_row("Total", totals);
    out.category_table_text = text.str();
    out.category_table_csv = csv.str();
  }

  // Per-benchmark detail CSV.
  {
    std::ostringstream csv;
    csv << "benchmark,category,solvers_solved,min_time,max_time,min_size,max_size,"
           "fastest_solvers,smallest_solvers\n";
    for (const BenchmarkDetail& d : sc.details) {
      bool any = d.solver_count > 0;
      bool any_size = any && !d.smallest.empty();
      csv << d.benchmark_id << ',' << category_of(categories, d.benchmark_id) << ','
          << d.solver_count << ',' << time_cell(d.min_time, any) << ','
          << time_cell(d.max_time, any) << ',' << size_cell(d.min_size, any_size) << ','
          << size_cell(d.max_size, any_size) << ',' << joined(d.fastest) << ','
          << joined(d.smallest) << '\n';
    }
    out.detail_csv = csv.str();
  }

  if (with_svg && !sc.details.empty())
    out.svg = svg_charts(category_order, solver_order, by_cat, solved_by_bench);
  return out;
}

} // namespace sygus
