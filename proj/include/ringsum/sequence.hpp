#ifndef RINGSUM_SEQUENCE_HPP
#define RINGSUM_SEQUENCE_HPP

#include "ringsum/tower.hpp"

namespace ringsum {

// Numeric side of the engine: generators unrolled as sequences from a start
// index.  Values stay exact (Const), so parameters survive evaluation.
struct SeqContext {
    long startIndex = 0;
    // per generator name; defaults are 0 for Sigma and 1 for Pi/R generators
    std::map<std::string, Const> initialValues;
};

// Values of e at k = a, a+s, ..., b (s = tower shift step).  Throws
// PoleAtPoint when a coefficient denominator vanishes or a generator
// recurrence cannot be unrolled through a point.
std::vector<Const> eval_sequence(const Tower& t, const TowerElem& e, const SeqContext& ctx,
                                 long a, long b);

Const eval_at(const Tower& t, const TowerElem& e, const SeqContext& ctx, long k);

} // namespace ringsum

#endif
