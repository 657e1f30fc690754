#ifndef RANDIC_FAMILIES_HPP
#define RANDIC_FAMILIES_HPP

#include <string>
#include <vector>

#include "randic/graph.hpp"
#include "randic/invariants.hpp"

namespace randic {

enum class Family {
    complete,
    cycle,
    path,
    star,
    multipartite,
    turan,
    pineapple,
    star_clique,
    pendant_cycle,
    kite,
    connectivity_split,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Parameter record naming one extremal family. Construct through the
/// factories below; they validate all per-family constraints eagerly.
struct FamilySpec {
    Family family;
    int n = 0;
    int c = 0;                   // parts / clique size / cut edges / connectivity
    std::vector<int> parts;      // multipartite: n_1 >= ... >= n_c >= 1
    std::vector<int> pendants;   // star_clique: m_1..m_c, sum = n - c
    int split_n1 = 0;            // connectivity_split: n1 >= 1, n1 + n2 = n - c

    static FamilySpec complete(int n);
    static FamilySpec cycle(int n);                     // n >= 3
    static FamilySpec path(int n);
    static FamilySpec star(int n);                      // n >= 2
    static FamilySpec multipartite(std::vector<int> parts);
    static FamilySpec turan(int n, int c);              // 1 <= c <= n
    static FamilySpec pineapple(int n, int c);          // 2 <= c <= n
    static FamilySpec star_clique(int n, std::vector<int> pendants);
    static FamilySpec pendant_cycle(int n, int c);      // c >= 1, n - c >= 3
    static FamilySpec kite(int n, int c);               // 2 <= c <= n
    static FamilySpec connectivity_split(int n, int c, int n1);

    std::string describe() const;
};

// Part sizes of the Turan graph T_n(c), descending.
std::vector<int> turan_parts(int n, int c);

// True iff the graph is complete multipartite, i.e. non-adjacency is
// transitive. Complete and edgeless graphs qualify.
bool is_complete_multipartite(const Graph& g);

// Deterministic construction with the canonical vertex labeling:
// clique vertices first, then cycle vertices, then pendants in
// attachment order.
Graph generate(const FamilySpec& spec);

// Degree multiset of the family as (degree, count) pairs, without
// building the graph.
std::vector<std::pair<int, int>> degree_profile(const FamilySpec& spec);

// Closed-form evaluation of the index from the degree profile.
double predicted_index(const FamilySpec& spec, GammaExponent gamma);

}  // namespace randic

#endif  // RANDIC_FAMILIES_HPP
