#include "quivstab/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace quivstab {

namespace {

// (length, lex) order on arrow-id words; the monomial order behind rewriting.
bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

using Combo = PathStructure::Combo;

void combo_add(Combo& c, const std::vector<int>& path, const Rational& coeff) {
    auto it = c.find(path);
    if (it == c.end()) {
        if (coeff != 0) c.emplace(path, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) c.erase(it);
}

// First (position, rule) whose lhs occurs as a contiguous subword, or nullopt.
std::optional<std::pair<size_t, size_t>> find_redex(const std::vector<int>& w,
                                                    const std::vector<PathStructure::Rule>& rules) {
    for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t r = 0; r < rules.size(); ++r) {
            const auto& lhs = rules[r].lhs;
            if (pos + lhs.size() > w.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return {{pos, r}};
        }
    return std::nullopt;
}

Combo normalize_with(const Combo& input, const std::vector<PathStructure::Rule>& rules) {
    Combo result;
    std::deque<std::pair<std::vector<int>, Rational>> work(input.begin(), input.end());
    long long steps = 0;
    while (!work.empty()) {
        auto [w, c] = work.front();
        work.pop_front();
        if (++steps > 2'000'000) throw BudgetError("path rewriting did not terminate within budget");
        auto redex = find_redex(w, rules);
        if (!redex) {
            combo_add(result, w, c);
            continue;
        }
        auto [pos, r] = *redex;
        const auto& rule = rules[r];
        for (const auto& [rc, rpath] : rule.rhs) {
            std::vector<int> nw;
            nw.reserve(w.size() - rule.lhs.size() + rpath.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rpath.begin(), rpath.end());
            nw.insert(nw.end(), w.begin() + pos + rule.lhs.size(), w.end());
            work.emplace_back(std::move(nw), c * rc);
        }
    }
    return result;
}

// Orients a combo into a rule rewriting its leading word to the rest.
std::optional<PathStructure::Rule> orient(const Combo& c) {
    if (c.empty()) return std::nullopt;
    auto lead = c.begin();
    for (auto it = c.begin(); it != c.end(); ++it)
        if (word_less(lead->first, it->first)) lead = it;
    PathStructure::Rule rule;
    rule.lhs = lead->first;
    if (rule.lhs.size() < 2)
        throw DomainError("relations generate a non-admissible ideal (rule of length < 2)");
    Rational lc = lead->second;
    for (auto it = c.begin(); it != c.end(); ++it) {
        if (it == lead) continue;
        rule.rhs.emplace_back(-it->second / lc, it->first);
    }
    return rule;
}

}  // namespace

Combo PathStructure::normalize(const Combo& c) const { return normalize_with(c, rules); }

Combo PathStructure::normalize_path(const std::vector<int>& path) const {
    Combo c;
    c.emplace(path, Rational(1));
    return normalize_with(c, rules);
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::vector<PathRelation> relations)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
    if (vertices_.empty()) throw DomainError("quiver must have at least one vertex");
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
            if (vertices_[i] == vertices_[j]) throw DomainError("duplicate vertex name: " + vertices_[i]);
    for (size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (a.src < 0 || a.src >= num_vertices() || a.tgt < 0 || a.tgt >= num_vertices())
            throw DomainError("arrow endpoint not a declared vertex: " + a.name);
        for (size_t j = i + 1; j < arrows_.size(); ++j)
            if (arrows_[i].name == arrows_[j].name) throw DomainError("duplicate arrow name: " + a.name);
    }
    for (const PathRelation& rel : relations_) {
        if (rel.terms.empty()) throw DomainError("empty relation");
        int src = -1, tgt = -1;
        for (const RelationTerm& t : rel.terms) {
            if (t.path.size() < 2) throw DomainError("relation path of length < 2");
            for (size_t k = 0; k + 1 < t.path.size(); ++k) {
                if (t.path[k] < 0 || t.path[k] >= num_arrows() || t.path[k + 1] < 0 ||
                    t.path[k + 1] >= num_arrows())
                    throw DomainError("relation references unknown arrow");
                // composition order: entry k+1 feeds entry k
                if (arrows_[t.path[k + 1]].tgt != arrows_[t.path[k]].src)
                    throw DomainError("relation path is not composable");
            }
            int s = path_source(t.path), e = path_target(t.path);
            if (src < 0) {
                src = s;
                tgt = e;
            } else if (s != src || e != tgt) {
                throw DomainError("relation terms do not share source and target");
            }
            if (t.coeff == 0) throw DomainError("relation term with zero coefficient");
        }
    }
}

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices_[i] == name) return i;
    throw DomainError("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows_[i].name == name) return i;
    throw DomainError("unknown arrow: " + name);
}

int Quiver::path_source(const std::vector<int>& path) const {
    if (path.empty()) throw InternalError("source of empty path is ambiguous");
    return arrows_[path.back()].src;
}

int Quiver::path_target(const std::vector<int>& path) const {
    if (path.empty()) throw InternalError("target of empty path is ambiguous");
    return arrows_[path.front()].tgt;
}

const PathStructure& Quiver::paths(int bound) const {
    if (bound <= 0) bound = default_path_bound();
    if (paths_cache_ && paths_cache_->bound >= bound) return *paths_cache_;

    auto ps = std::make_shared<PathStructure>();
    ps->bound = bound;

    // Initial rules from relations, then completion on overlap and inclusion
    // ambiguities (diamond lemma). T_N commutation relations are already
    // confluent; the loop is a no-op for them.
    for (const PathRelation& rel : relations_) {
        Combo c;
        for (const RelationTerm& t : rel.terms) combo_add(c, t.path, t.coeff);
        if (auto r = orient(c)) ps->rules.push_back(*r);
    }
    bool changed = true;
    int rounds = 0;
    while (changed) {
        changed = false;
        if (++rounds > 64 || ps->rules.size() > 4096)
            throw BudgetError("rewriting completion exceeded budget");
        size_t n = ps->rules.size();
        for (size_t i = 0; i < n && !changed; ++i)
            for (size_t j = 0; j < n && !changed; ++j) {
                const auto& w1 = ps->rules[i].lhs;
                const auto& w2 = ps->rules[j].lhs;
                // overlap: proper suffix of w1 == proper prefix of w2
                for (size_t olen = 1; olen < w1.size() && olen < w2.size(); ++olen) {
                    if (!std::equal(w2.begin(), w2.begin() + olen, w1.end() - olen)) continue;
                    std::vector<int> sup(w1.begin(), w1.end());
                    sup.insert(sup.end(), w2.begin() + olen, w2.end());
                    if (int(sup.size()) > bound) continue;
                    Combo c;
                    combo_add(c, sup, Rational(1));
                    Combo n1 = normalize_with(c, ps->rules);
                    // alternative first step: rewrite the w2 occurrence first
                    Combo alt;
                    size_t pos = w1.size() - olen;
                    for (const auto& [rc, rpath] : ps->rules[j].rhs) {
                        std::vector<int> nw(sup.begin(), sup.begin() + pos);
                        nw.insert(nw.end(), rpath.begin(), rpath.end());
                        combo_add(alt, nw, rc);
                    }
                    Combo n2 = normalize_with(alt, ps->rules);
                    Combo diff = n1;
                    for (const auto& [w, cc] : n2) combo_add(diff, w, -cc);
                    if (!diff.empty()) {
                        ps->rules.push_back(*orient(diff));
                        changed = true;
                        break;
                    }
                }
                if (changed) break;
                // inclusion: w2 strictly inside w1 (i != j)
                if (i != j && w2.size() < w1.size()) {
                    for (size_t pos = 0; pos + w2.size() <= w1.size(); ++pos) {
                        if (!std::equal(w2.begin(), w2.end(), w1.begin() + pos)) continue;
                        Combo c;
                        combo_add(c, w1, Rational(1));
                        Combo n1 = normalize_with(c, ps->rules);
                        Combo alt;
                        for (const auto& [rc, rpath] : ps->rules[j].rhs) {
                            std::vector<int> nw(w1.begin(), w1.begin() + pos);
                            nw.insert(nw.end(), rpath.begin(), rpath.end());
                            nw.insert(nw.end(), w1.begin() + pos + w2.size(), w1.end());
                            combo_add(alt, nw, rc);
                        }
                        Combo n2 = normalize_with(alt, ps->rules);
                        Combo diff = n1;
                        for (const auto& [w, cc] : n2) combo_add(diff, w, -cc);
                        if (!diff.empty()) {
                            ps->rules.push_back(*orient(diff));
                            changed = true;
                            break;
                        }
                    }
                }
            }
    }

    // Irreducible paths by BFS, grouped by (source, target).
    int nv = num_vertices();
    ps->basis.assign(nv, std::vector<std::vector<std::vector<int>>>(nv));
    for (int x = 0; x < nv; ++x) {
        std::deque<std::vector<int>> frontier;
        frontier.push_back({});  // e_x
        ps->basis[x][x].push_back({});
        while (!frontier.empty()) {
            std::vector<int> w = frontier.front();
            frontier.pop_front();
            int head = w.empty() ? x : path_target(w);
            for (int a = 0; a < num_arrows(); ++a) {
                if (arrows_[a].src != head) continue;
                std::vector<int> nw;
                nw.reserve(w.size() + 1);
                nw.push_back(a);  // composition order: new arrow applied last
                nw.insert(nw.end(), w.begin(), w.end());
                if (find_redex(nw, ps->rules)) continue;
                if (int(nw.size()) >= bound)
                    throw BudgetError(
                        "irreducible path reached the length bound; cannot certify a finite "
                        "dimensional path algebra (bound " +
                        std::to_string(bound) + ")");
                ps->basis[x][arrows_[a].tgt].push_back(nw);
                frontier.push_back(std::move(nw));
            }
        }
        for (int y = 0; y < nv; ++y)
            std::sort(ps->basis[x][y].begin(), ps->basis[x][y].end(), word_less);
    }

    paths_cache_ = ps;
    return *paths_cache_;
}

bool Quiver::same_as(const Quiver& o) const {
    if (vertices_ != o.vertices_) return false;
    if (arrows_.size() != o.arrows_.size()) return false;
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name != o.arrows_[i].name || arrows_[i].src != o.arrows_[i].src ||
            arrows_[i].tgt != o.arrows_[i].tgt)
            return false;
    if (relations_.size() != o.relations_.size()) return false;
    for (size_t i = 0; i < relations_.size(); ++i) {
        if (relations_[i].terms.size() != o.relations_[i].terms.size()) return false;
        for (size_t j = 0; j < relations_[i].terms.size(); ++j)
            if (relations_[i].terms[j].coeff != o.relations_[i].terms[j].coeff ||
                relations_[i].terms[j].path != o.relations_[i].terms[j].path)
                return false;
    }
    return true;
}

QuiverPtr make_pn(int n) {
    if (n < 1) throw DomainError("P_n requires n >= 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i) arrows.push_back({"a" + std::to_string(i), 0, 1});
    return std::make_shared<Quiver>(std::vector<std::string>{"1", "2"}, std::move(arrows),
                                    std::vector<PathRelation>{});
}

QuiverPtr make_tn(int N) {
    if (N < 1) throw DomainError("T_N requires N >= 1");
    std::vector<std::string> verts;
    for (int i = 0; i <= N; ++i) verts.push_back("X" + std::to_string(i));
    std::vector<Arrow> arrows;
    auto idx = [N](int i, int j) { return i * (N + 1) + j; };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= N; ++j)
            arrows.push_back({"phi" + std::to_string(i) + "_" + std::to_string(j), i, i + 1});
    std::vector<PathRelation> rels;
    for (int i = 0; i + 1 < N; ++i)
        for (int j = 0; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k) {
                PathRelation rel;
                rel.terms.push_back({Rational(1), {idx(i + 1, j), idx(i, k)}});
                rel.terms.push_back({Rational(-1), {idx(i + 1, k), idx(i, j)}});
                rels.push_back(std::move(rel));
            }
    return std::make_shared<Quiver>(std::move(verts), std::move(arrows), std::move(rels));
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Parses one relation line: a comma-separated list of (coeff, [a, b, ...]).
PathRelation parse_relation_line(const std::string& line,
                                 const std::map<std::string, int>& arrow_ids) {
    PathRelation rel;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',')) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= line.size()) break;
        if (line[pos] != '(') throw DomainError("malformed relation term in: " + line);
        size_t close = line.find(')', pos);
        if (close == std::string::npos) throw DomainError("unterminated relation term in: " + line);
        std::string term = line.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        size_t comma = term.find(',');
        if (comma == std::string::npos) throw DomainError("relation term needs coefficient and path");
        Rational coeff = parse_rational(trim(term.substr(0, comma)));
        std::string rest = trim(term.substr(comma + 1));
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            throw DomainError("relation path must be bracketed: " + rest);
        std::string inner = rest.substr(1, rest.size() - 2);
        std::vector<int> path;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            auto it = arrow_ids.find(tok);
            if (it == arrow_ids.end()) throw DomainError("relation references unknown arrow: " + tok);
            path.push_back(it->second);
        }
        rel.terms.push_back({coeff, path});
    }
    if (rel.terms.empty()) throw DomainError("empty relation line");
    return rel;
}

}  // namespace

QuiverPtr parse_quiver(const std::string& spec_text) {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::string> relation_lines;
    std::map<std::string, int> vert_ids;

    enum class Section { None, Vertices, Arrows, Relations } sec = Section::None;
    std::stringstream ss(spec_text);
    std::string raw;
    while (std::getline(ss, raw)) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "[vertices]") {
            sec = Section::Vertices;
            continue;
        }
        if (line == "[arrows]") {
            sec = Section::Arrows;
            continue;
        }
        if (line == "[relations]") {
            sec = Section::Relations;
            continue;
        }
        switch (sec) {
            case Section::None:
                throw DomainError("content before any section header: " + line);
            case Section::Vertices:
                if (vert_ids.count(line)) throw DomainError("duplicate vertex name: " + line);
                vert_ids[line] = int(vertices.size());
                vertices.push_back(line);
                break;
            case Section::Arrows: {
                size_t colon = line.find(':');
                size_t arr = line.find("->");
                if (colon == std::string::npos || arr == std::string::npos || arr < colon)
                    throw DomainError("malformed arrow entry (want 'name: src -> tgt'): " + line);
                std::string name = trim(line.substr(0, colon));
                std::string src = trim(line.substr(colon + 1, arr - colon - 1));
                std::string tgt = trim(line.substr(arr + 2));
                if (!vert_ids.count(src)) throw DomainError("arrow source not declared: " + src);
                if (!vert_ids.count(tgt)) throw DomainError("arrow target not declared: " + tgt);
                arrows.push_back({name, vert_ids[src], vert_ids[tgt]});
                break;
            }
            case Section::Relations:
                relation_lines.push_back(line);
                break;
        }
    }
    std::map<std::string, int> arrow_ids;
    for (size_t i = 0; i < arrows.size(); ++i) arrow_ids[arrows[i].name] = int(i);
    std::vector<PathRelation> rels;
    for (const std::string& line : relation_lines) rels.push_back(parse_relation_line(line, arrow_ids));
    return std::make_shared<Quiver>(std::move(vertices), std::move(arrows), std::move(rels));
}

std::string quiver_to_text(const Quiver& q) {
    std::ostringstream out;
    out << "[vertices]\n";
    for (const auto& v : q.vertices()) out << v << "\n";
    out << "[arrows]\n";
    for (const auto& a : q.arrows())
        out << a.name << ": " << q.vertices()[a.src] << " -> " << q.vertices()[a.tgt] << "\n";
    if (!q.relations().empty()) {
        out << "[relations]\n";
        for (const auto& rel : q.relations()) {
            bool first = true;
            for (const auto& t : rel.terms) {
                if (!first) out << ", ";
                first = false;
                out << "(" << rat_str(t.coeff) << ", [";
                for (size_t i = 0; i < t.path.size(); ++i) {
                    if (i) out << ", ";
                    out << q.arrows()[t.path[i]].name;
                }
                out << "])";
            }
            out << "\n";
        }
    }
    return out.str();
}

namespace {
long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}
}  // namespace

int default_path_bound() { return int(env_ll("QUIVSTAB_PATH_BOUND", 64)); }
std::int64_t default_prime() { return env_ll("QUIVSTAB_PRIME", 5); }
long long default_subrep_budget() { return env_ll("QUIVSTAB_SUBREP_BUDGET", 10'000'000); }

}  // namespace quivstab
