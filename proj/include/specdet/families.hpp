#pragma once

#include <string>
#include <variant>
#include <vector>

#include "specdet/graph.hpp"

namespace specdet {

namespace family {
struct Complete { int n; };
struct Empty { int n; };
struct Path { int n; };
struct Cycle { int n; };
struct Star { int n; };  // K_{1,n-1}, hub is vertex 0
struct CompleteBipartite { int p, q; };
struct CompleteMultipartite { std::vector<int> parts; };
struct Turan { int n, k; };      // parts sorted by increasing size
struct Pyramid { int n, k; };    // K_k joined with n-k isolated vertices
struct Friendship { int p; };    // p triangles sharing vertex 0
struct GeneralizedFriendship { int p, q; };  // K_1 joined with p copies of K_q
struct Wheel { int n; };         // K_1 joined with C_{n-1}; n vertices in total
struct Lollipop { int n, p; };   // C_p on 0..p-1, then a path hanging from vertex 0
struct Sandglass { int path; };  // path 0..path-1 with a triangle on each end
struct Petersen {};
struct Lattice { int q; };       // line graph of K_{q,q}
struct Triangular { int k; };    // line graph of K_k
// Cycle C_l; vertex 0 carries one pendant and each marked vertex two pendants.
// Marked vertices sit at partial sums of steps (each step 4 or 6).
struct NiceSunlike { int l; std::vector<int> steps; };
}  // namespace family

using FamilySpec = std::variant<family::Complete, family::Empty, family::Path, family::Cycle,
                                family::Star, family::CompleteBipartite,
                                family::CompleteMultipartite, family::Turan, family::Pyramid,
                                family::Friendship, family::GeneralizedFriendship, family::Wheel,
                                family::Lollipop, family::Sandglass, family::Petersen,
                                family::Lattice, family::Triangular, family::NiceSunlike>;

Graph generate(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);

// Part sizes of the Turan graph T(n,k) in the order used by generate().
std::vector<int> turan_parts(int n, int k);

}  // namespace specdet
