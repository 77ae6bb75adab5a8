#pragma once

#include <string>
#include <string_view>

#include "infobs/automata.hpp"
#include "infobs/masks.hpp"

namespace infobs {

// Automaton text format (.aut), one directive per line, '#' starts a comment:
//
//   alphabet: a b c
//   states: 0 1 2          (optional; otherwise states appear in order of use)
//   initial: 0
//   marked: 1 2
//   trans: 0 a 1
//   trans: 1 eps 2         (NFA only)
//
// Mask text format (.map): "event -> target" mappings, any number per line,
// with target "eps" for erased events.

Nfa parse_nfa(std::string_view text);
Dfa parse_dfa(std::string_view text);
std::string serialize(const Nfa& nfa);
std::string serialize(const Dfa& dfa);

Mask parse_mask(std::string_view text, const Alphabet& sigma);
std::string serialize(const Mask& mask);

/// Graphviz digraph: double circles for marked states, a point-shaped entry
/// node per initial state, parallel edges merged with comma-joined labels.
std::string export_dot(const Nfa& nfa);
std::string export_dot(const Dfa& dfa);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace infobs
