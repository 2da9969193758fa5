#include "hopfsplit/linmap.hpp"

namespace hopfsplit {

template class LinMap<Rational>;
template class LinMap<Fp>;

}  // namespace hopfsplit
