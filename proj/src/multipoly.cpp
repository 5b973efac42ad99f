#include "unbendable/multipoly.hpp"

#include "unbendable/rational_function.hpp"

namespace unbendable {

template class MultiPoly<Rational>;
template class MultiPoly<RationalFunction>;

}  // namespace unbendable
