#include "superorbit/linalg.hpp"

namespace superorbit {

template class Matrix<Rational>;
template class Matrix<RationalFunction>;
template class Subspace<Rational>;
template class Subspace<RationalFunction>;
template class SpanBuilder<Rational>;
template class SpanBuilder<RationalFunction>;

}  // namespace superorbit
