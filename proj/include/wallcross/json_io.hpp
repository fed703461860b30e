#pragma once

#include <string>

#include "wallcross/cks.hpp"
#include "wallcross/qseries.hpp"

namespace wallcross {

/// {"vars":["x","y","t","w"],"terms":[{"e":[ex,ey,et,ew],"num":"..","den":".."}]}
std::string to_json(const LaurentPoly& p);

/// Adds {"var":"q","order":N,"coeffs":[...]} around the coefficient list.
std::string to_json(const QSeries& s);

/// CSV rows (q_degree, t_polynomial-as-string), one per nonzero coefficient.
std::string to_csv(const QSeries& s);

LaurentPoly laurent_from_json(const std::string& text);

/// Accepts {"vertices":k,"edges":[[u,v],...]} as well as the generator
/// shorthands "banana:k" and "rose:k".
Multigraph graph_from_spec(const std::string& text);

} // namespace wallcross
