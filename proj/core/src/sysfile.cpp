#include "llcent/sysfile.hpp"

#include <fstream>
#include <sstream>

namespace llcent {

namespace {

struct Line {
  int number;
  std::string key;
  std::vector<long long> values;
};

struct Section {
  int number = 0;
  std::vector<Line> lines;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::map<std::string, std::vector<Section>> split_sections(
    const std::string& text) {
  std::map<std::string, std::vector<Section>> sections;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section");
      current = trim(line.substr(1, line.size() - 2));
      if (current.empty()) throw ParseError(line_no, "empty section name");
      sections[current].push_back(Section{line_no, {}});
      continue;
    }
    if (current.empty())
      throw ParseError(line_no, "content before any [section] header");

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string rest = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");

    Line entry{line_no, key, {}};
    std::istringstream vals(rest);
    std::string tok;
    while (vals >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        entry.values.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected integer, got '" + tok + "'");
      }
    }
    if (entry.values.empty())
      throw ParseError(line_no, "expected at least one integer value");
    sections[current].back().lines.push_back(std::move(entry));
  }
  return sections;
}

const Section& single_section(
    const std::map<std::string, std::vector<Section>>& sections,
    const std::string& name) {
  auto it = sections.find(name);
  if (it == sections.end())
    throw ParseError(0, "missing required section [" + name + "]");
  if (it->second.size() > 1)
    throw ParseError(it->second[1].number, "duplicate section [" + name + "]");
  return it->second.front();
}

const Line& single_line(const Section& sec, const std::string& key) {
  const Line* found = nullptr;
  for (const auto& line : sec.lines)
    if (line.key == key) {
      if (found) throw ParseError(line.number, "duplicate key '" + key + "'");
      found = &line;
    }
  if (!found)
    throw ParseError(sec.number, "missing key '" + key + "'");
  if (found->values.size() != 1)
    throw ParseError(found->number, "key '" + key + "' takes one value");
  return *found;
}

long long single_value(const Section& sec, const std::string& key) {
  return single_line(sec, key).values[0];
}

BandedEndo parse_endo(const Section& sec, const SpaceSpec& space) {
  EndoBuilder b(space);

  long long band = single_value(sec, "band");
  if (band < 0 || band > 64)
    throw ParseError(sec.number, "band out of range");
  b.band = static_cast<int>(band);

  const Line* range = nullptr;
  for (const auto& line : sec.lines)
    if (line.key == "core-range") {
      if (range) throw ParseError(line.number, "duplicate core-range");
      range = &line;
    }
  if (!range) throw ParseError(sec.number, "missing key 'core-range'");
  if (range->values.size() != 2)
    throw ParseError(range->number, "core-range takes two values: lo hi");
  b.core_lo = static_cast<int>(range->values[0]);
  b.core_hi = static_cast<int>(range->values[1]);
  if (b.core_hi < b.core_lo - 1)
    throw ParseError(range->number, "core-range hi must be >= lo - 1");

  long long pl = single_value(sec, "left-period");
  long long pr = single_value(sec, "right-period");
  if (pl < 1 || pl > 64) throw ParseError(sec.number, "left-period out of range");
  if (pr < 1 || pr > 64)
    throw ParseError(sec.number, "right-period out of range");
  b.period_left = static_cast<int>(pl);
  b.period_right = static_cast<int>(pr);

  for (const auto& line : sec.lines) {
    if (line.key != "core" && line.key != "left" && line.key != "right")
      continue;
    if (line.values.size() != 5)
      throw ParseError(line.number,
                       "entry takes 5 values: row out-track in-track offset "
                       "value");
    long long row = line.values[0];
    int to = static_cast<int>(line.values[1]);
    int ti = static_cast<int>(line.values[2]);
    int off = static_cast<int>(line.values[3]);
    long long value = line.values[4];
    if (to < 1 || to > space.tracks || ti < 1 || ti > space.tracks)
      throw ParseError(line.number, "track index out of range");
    if (off < -b.band || off > b.band)
      throw ParseError(line.number, "offset exceeds the band");
    if (value < 0 || value >= space.field.p)
      throw ParseError(line.number, "value not reduced mod p");
    try {
      if (line.key == "core")
        b.set_core(static_cast<int>(row), to, ti, off,
                   static_cast<Scalar>(value));
      else if (line.key == "left")
        b.set_left(static_cast<int>(row), to, ti, off,
                   static_cast<Scalar>(value));
      else
        b.set_right(static_cast<int>(row), to, ti, off,
                    static_cast<Scalar>(value));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }

  for (const auto& line : sec.lines) {
    if (line.key == "band" || line.key == "core-range" ||
        line.key == "left-period" || line.key == "right-period" ||
        line.key == "core" || line.key == "left" || line.key == "right")
      continue;
    throw ParseError(line.number, "unknown key '" + line.key + "'");
  }
  return b.build();
}

} // namespace

SystemFile parse_system(const std::string& text) {
  auto sections = split_sections(text);
  for (const auto& [name, secs] : sections)
    if (name != "field" && name != "space" && name != "endo" &&
        name != "invariant" && name != "inverse")
      throw ParseError(secs.front().number, "unknown section [" + name + "]");

  const Section& field_sec = single_section(sections, "field");
  const Line& p_line = single_line(field_sec, "p");
  long long p = p_line.values[0];
  if (p < 2 || p > 46337)
    throw ParseError(p_line.number, "modulus out of range");
  // reject composites and prime powers alike: only F_p is supported
  if (!is_prime(static_cast<std::uint32_t>(p)))
    throw ParseError(p_line.number,
                     "modulus " + std::to_string(p) + " is not prime");
  FieldSpec field(static_cast<std::uint32_t>(p));

  const Section& space_sec = single_section(sections, "space");
  const Line& tracks_line = single_line(space_sec, "tracks");
  long long tracks = tracks_line.values[0];
  if (tracks < 1 || tracks > 64)
    throw ParseError(tracks_line.number, "tracks must be in [1, 64]");
  SpaceSpec space(field, static_cast<int>(tracks));

  const Section& endo_sec = single_section(sections, "endo");
  BandedEndo endo = parse_endo(endo_sec, space);

  std::optional<TrackSubspace> invariant;
  if (auto it = sections.find("invariant"); it != sections.end()) {
    if (it->second.size() > 1)
      throw ParseError(it->second[1].number, "duplicate section [invariant]");
    const Section& sec = it->second.front();
    const Line* tr = nullptr;
    for (const auto& line : sec.lines) {
      if (line.key != "tracks")
        throw ParseError(line.number, "unknown key '" + line.key + "'");
      if (tr) throw ParseError(line.number, "duplicate key 'tracks'");
      tr = &line;
    }
    if (!tr) throw ParseError(sec.number, "missing key 'tracks'");
    std::vector<int> ts;
    for (long long v : tr->values) {
      if (v < 1 || v > space.tracks)
        throw ParseError(tr->number, "invariant track out of range");
      ts.push_back(static_cast<int>(v));
    }
    invariant = TrackSubspace(ts);
  }

  std::optional<BandedEndo> inverse;
  if (auto it = sections.find("inverse"); it != sections.end()) {
    if (it->second.size() > 1)
      throw ParseError(it->second[1].number, "duplicate section [inverse]");
    inverse = parse_endo(it->second.front(), space);
  }

  return SystemFile{space, std::move(endo), std::move(invariant),
                    std::move(inverse)};
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

namespace {

void print_endo(std::ostream& out, const BandedEndo& f) {
  const int t = f.space().tracks;
  out << "band = " << f.band() << "\n";
  out << "core-range = " << f.core_lo() << " " << f.core_hi() << "\n";
  out << "left-period = " << f.period_left() << "\n";
  out << "right-period = " << f.period_right() << "\n";
  auto dump = [&](const char* key, int row, int actual_pos) {
    for (int to = 1; to <= t; ++to)
      for (int ti = 1; ti <= t; ++ti)
        for (int o = -f.band(); o <= f.band(); ++o) {
          Scalar v = f.entry(actual_pos, to, ti, o);
          if (v != 0)
            out << key << " = " << row << " " << to << " " << ti << " " << o
                << " " << v << "\n";
        }
  };
  for (int i = f.core_lo(); i <= f.core_hi(); ++i) dump("core", i, i);
  for (int r = 0; r < f.period_left(); ++r)
    dump("left", r, f.core_lo() - 1 - r);
  for (int r = 0; r < f.period_right(); ++r)
    dump("right", r, f.core_hi() + 1 + r);
}

} // namespace

std::string print_system(const SystemFile& system) {
  std::ostringstream out;
  out << "[field]\n";
  out << "p = " << system.space.field.p << "\n\n";
  out << "[space]\n";
  out << "tracks = " << system.space.tracks << "\n\n";
  out << "[endo]\n";
  print_endo(out, system.endo);
  if (system.invariant_tracks) {
    out << "\n[invariant]\n";
    out << "tracks =";
    for (int tr : system.invariant_tracks->tracks) out << " " << tr;
    out << "\n";
  }
  if (system.inverse) {
    out << "\n[inverse]\n";
    print_endo(out, *system.inverse);
  }
  return out.str();
}

} // namespace llcent
