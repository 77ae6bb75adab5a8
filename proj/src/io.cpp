#include "infobs/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "infobs/errors.hpp"

namespace infobs {

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::string join(const std::vector<std::string>& words, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

// Printable, whitespace-free and comment-free; subset names such as {0,1} qualify.
bool is_valid_state_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) { return c > ' ' && c < 127 && c != '#'; });
}

struct ParsedTransition {
  std::string from;
  std::string event;
  std::string to;
  std::size_t line;
};

// Directive-level contents of an automaton file, before any
// determinism checks.
struct ParsedAutomaton {
  std::vector<std::string> alphabet;
  bool has_alphabet = false;
  std::vector<std::string> states;
  std::map<std::string, State> index;
  std::vector<std::string> initial;
  std::vector<std::string> marked;
  std::size_t initial_line = 0;
  std::vector<ParsedTransition> transitions;
  // Set by a states: directive; later names must already be declared.
  bool closed = false;

  State intern(const std::string& name, std::size_t line) {
    if (!is_valid_state_name(name)) throw FormatError("invalid state name '" + name + "'", line);
    if (closed && !index.count(name)) throw FormatError("undeclared state '" + name + "'", line);
    auto [it, inserted] = index.try_emplace(name, static_cast<State>(states.size()));
    if (inserted) states.push_back(name);
    return it->second;
  }
};

ParsedAutomaton parse_directives(std::string_view text) {
  ParsedAutomaton p;
  bool declared_states = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_no;
    const std::string_view line = strip_comment(text.substr(start, end - start));
    start = end + 1;
    const auto colon = line.find(':');
    const auto words_all = split_words(line);
    if (words_all.empty()) continue;
    if (colon == std::string_view::npos) throw FormatError("expected 'directive:'", line_no);
    const auto key_words = split_words(line.substr(0, colon));
    if (key_words.size() != 1) throw FormatError("malformed directive", line_no);
    const std::string& key = key_words.front();
    const auto args = split_words(line.substr(colon + 1));

    if (key == "alphabet") {
      if (p.has_alphabet) throw FormatError("duplicate alphabet directive", line_no);
      for (const auto& e : args)
        if (!is_valid_user_event_token(e)) throw FormatError("invalid event token '" + e + "'", line_no);
      if (std::set<std::string>(args.begin(), args.end()).size() != args.size()) {
        throw FormatError("duplicate event in alphabet", line_no);
      }
      p.alphabet = args;
      p.has_alphabet = true;
    } else if (key == "states") {
      if (declared_states || !p.states.empty()) throw FormatError("states must be declared once, before use", line_no);
      declared_states = true;
      for (const auto& s : args) {
        const auto before = p.states.size();
        p.intern(s, line_no);
        if (p.states.size() == before) throw FormatError("duplicate state '" + s + "'", line_no);
      }
      p.closed = true;
    } else if (key == "initial") {
      if (p.initial_line) throw FormatError("duplicate initial directive", line_no);
      p.initial_line = line_no;
      for (const auto& s : args) p.intern(s, line_no);
      p.initial = args;
    } else if (key == "marked") {
      for (const auto& s : args) p.intern(s, line_no);
      p.marked.insert(p.marked.end(), args.begin(), args.end());
    } else if (key == "trans") {
      if (args.size() != 3) throw FormatError("expected 'trans: src event dst'", line_no);
      if (!p.has_alphabet) throw FormatError("alphabet must precede transitions", line_no);
      const std::string& event = args[1];
      if (event != kEpsilonToken && std::find(p.alphabet.begin(), p.alphabet.end(), event) == p.alphabet.end()) {
        throw FormatError("unknown event '" + event + "'", line_no);
      }
      p.intern(args[0], line_no);
      p.intern(args[2], line_no);
      p.transitions.push_back({args[0], event, args[2], line_no});
    } else {
      throw FormatError("unknown directive '" + key + "'", line_no);
    }
    if (end == text.size()) break;
  }
  if (!p.has_alphabet) throw FormatError("missing alphabet directive", line_no);
  return p;
}

// Names equal to the index are left implicit.
bool all_index_names(const ParsedAutomaton& p) {
  for (State q = 0; q < p.states.size(); ++q)
    if (p.states[q] != std::to_string(q)) return false;
  return true;
}

template <typename Automaton>
std::vector<std::string> state_names(const Automaton& a) {
  std::vector<std::string> names;
  for (State q = 0; q < a.num_states(); ++q) names.push_back(a.state_name(q));
  return names;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct DotEdges {
  std::map<std::pair<State, State>, std::vector<std::string>> labels;
};

std::string render_dot(std::size_t num_states, const std::vector<std::string>& names, const std::vector<bool>& marked,
                       const StateSet& initial, const DotEdges& edges) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  if (num_states) out << "  node [shape=circle];\n";
  for (State q = 0; q < num_states; ++q) {
    out << "  " << quote(names[q]);
    if (marked[q]) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (State q : initial) {
    const std::string entry = "__start" + std::to_string(q);
    out << "  " << quote(entry) << " [shape=point];\n";
    out << "  " << quote(entry) << " -> " << quote(names[q]) << ";\n";
  }
  for (const auto& [pair, labels] : edges.labels) {
    out << "  " << quote(names[pair.first]) << " -> " << quote(names[pair.second]) << " [label="
        << quote(join(labels, ",")) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

Nfa parse_nfa(std::string_view text) {
  ParsedAutomaton p = parse_directives(text);
  Nfa nfa{Alphabet(p.alphabet)};
  const bool implicit = all_index_names(p);
  for (State q = 0; q < p.states.size(); ++q) nfa.add_state(implicit ? std::string{} : p.states[q]);
  for (const auto& s : p.initial) nfa.set_initial(p.index.at(s));
  for (const auto& s : p.marked) nfa.set_marked(p.index.at(s));
  for (const auto& t : p.transitions) nfa.add_transition(p.index.at(t.from), t.event, p.index.at(t.to));
  return nfa;
}

Dfa parse_dfa(std::string_view text) {
  ParsedAutomaton p = parse_directives(text);
  Dfa dfa{Alphabet(p.alphabet)};
  const bool implicit = all_index_names(p);
  for (State q = 0; q < p.states.size(); ++q) dfa.add_state(implicit ? std::string{} : p.states[q]);
  if (p.initial.size() > 1) throw FormatError("a DFA has at most one initial state", p.initial_line);
  if (!p.initial.empty()) dfa.set_initial(p.index.at(p.initial.front()));
  for (const auto& s : p.marked) dfa.set_marked(p.index.at(s));
  for (const auto& t : p.transitions) {
    if (t.event == kEpsilonToken) throw FormatError("epsilon transition in a DFA", t.line);
    const State from = p.index.at(t.from);
    const Label a = dfa.alphabet().index_of(t.event);
    if (dfa.next(from, a) != kNoState) {
      throw FormatError("second '" + t.event + "' transition from state '" + t.from + "'", t.line);
    }
    dfa.set_transition(from, a, p.index.at(t.to));
  }
  return dfa;
}

std::string serialize(const Nfa& nfa) {
  std::ostringstream out;
  const auto names = state_names(nfa);
  out << "alphabet: " << join(nfa.alphabet().events()) << "\n";
  out << "states: " << join(names) << "\n";
  std::vector<std::string> initial;
  for (State q : nfa.initial_states()) initial.push_back(names[q]);
  out << "initial: " << join(initial) << "\n";
  std::vector<std::string> marked;
  for (State q : nfa.marked_states()) marked.push_back(names[q]);
  out << "marked: " << join(marked) << "\n";
  for (State q = 0; q < nfa.num_states(); ++q) {
    for (const Transition& t : nfa.transitions(q)) {
      out << "trans: " << names[q] << " "
          << (t.label == kEpsilon ? std::string(kEpsilonToken) : nfa.alphabet()[t.label]) << " " << names[t.target]
          << "\n";
    }
  }
  return out.str();
}

std::string serialize(const Dfa& dfa) {
  std::ostringstream out;
  const auto names = state_names(dfa);
  out << "alphabet: " << join(dfa.alphabet().events()) << "\n";
  out << "states: " << join(names) << "\n";
  out << "initial:" << (dfa.has_initial() ? " " + names[dfa.initial()] : std::string{}) << "\n";
  std::vector<std::string> marked;
  for (State q = 0; q < dfa.num_states(); ++q)
    if (dfa.is_marked(q)) marked.push_back(names[q]);
  out << "marked: " << join(marked) << "\n";
  for (State q = 0; q < dfa.num_states(); ++q) {
    for (Label a = 0; a < static_cast<Label>(dfa.alphabet().size()); ++a) {
      if (State t = dfa.next(q, a); t != kNoState) out << "trans: " << names[q] << " " << dfa.alphabet()[a] << " " << names[t] << "\n";
    }
  }
  return out.str();
}

Mask parse_mask(std::string_view text, const Alphabet& sigma) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> targets;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::string line(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    for (std::size_t at = line.find("->"); at != std::string::npos; at = line.find("->", at + 4)) {
      line.replace(at, 2, " -> ");
    }
    const auto words = split_words(line);
    if (words.size() % 3 != 0) throw FormatError("expected 'event -> target' mappings", line_no);
    for (std::size_t i = 0; i < words.size(); i += 3) {
      const auto& from = words[i];
      const auto& to = words[i + 2];
      if (words[i + 1] != "->") throw FormatError("expected '->' after '" + from + "'", line_no);
      if (!sigma.contains(from)) throw FormatError("event '" + from + "' is not in the alphabet", line_no);
      if (std::any_of(pairs.begin(), pairs.end(), [&](const auto& pr) { return pr.first == from; })) {
        throw FormatError("event '" + from + "' mapped twice", line_no);
      }
      if (to != kEpsilonToken) {
        if (!is_valid_user_event_token(to)) throw FormatError("invalid target token '" + to + "'", line_no);
        targets.push_back(to);
      }
      pairs.emplace_back(from, to);
    }
    if (end == text.size()) break;
  }
  if (pairs.size() != sigma.size()) throw FormatError("mask not total", line_no);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  return Mask::from_pairs(sigma, Alphabet(targets), pairs);
}

std::string serialize(const Mask& mask) {
  std::ostringstream out;
  for (std::size_t x = 0; x < mask.domain().size(); ++x) {
    const Label y = mask.image(static_cast<Label>(x));
    out << mask.domain()[static_cast<Label>(x)] << " -> "
        << (y == kEpsilon ? std::string(kEpsilonToken) : mask.codomain()[y]) << "\n";
  }
  return out.str();
}

std::string export_dot(const Nfa& nfa) {
  DotEdges edges;
  for (State q = 0; q < nfa.num_states(); ++q)
    for (const Transition& t : nfa.transitions(q))
      edges.labels[{q, t.target}].push_back(t.label == kEpsilon ? "ε" : nfa.alphabet()[t.label]);
  std::vector<bool> marked(nfa.num_states());
  for (State q = 0; q < nfa.num_states(); ++q) marked[q] = nfa.is_marked(q);
  return render_dot(nfa.num_states(), state_names(nfa), marked, nfa.initial_states(), edges);
}

std::string export_dot(const Dfa& dfa) { return export_dot(to_nfa(dfa)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace infobs
