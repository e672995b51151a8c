#pragma once

#include <span>
#include <string>
#include <string_view>

namespace ftml {

using VecView = std::span<const double>;

enum class Norm { l1, l2, linf };

Norm parse_norm(std::string_view s);  // "1" | "2" | "inf"
std::string_view norm_name(Norm p);

// ||u - v||_p
double word_distance(VecView u, VecView v, Norm p);

// Subgradient of word_distance with respect to u; the gradient with respect
// to v is its negation. Conventions:
//   l2:   zero when dist < epsilon_guard (coincident vectors)
//   l1:   sign with sign(0) = 0
//   linf: flows only through the max-magnitude coordinate, ties broken by
//         lowest coordinate index
// `dist` must be the precomputed distance for the same (u, v, p).
void word_distance_grad(VecView u, VecView v, Norm p, double dist, double epsilon_guard,
                        std::span<double> out);

}  // namespace ftml
