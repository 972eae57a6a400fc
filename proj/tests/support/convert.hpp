#pragma once

#include "oracles.hpp"
#include "qf/group.hpp"
#include "qf/quandle.hpp"

inline oracle::Table rows(const qf::FiniteQuandle& q) {
  oracle::Table t(q.order(), std::vector<std::uint32_t>(q.order()));
  for (qf::Index x = 0; x < q.order(); ++x)
    for (qf::Index y = 0; y < q.order(); ++y) t[x][y] = q.op(x, y);
  return t;
}

inline oracle::Table rows(const qf::FiniteGroup& g) {
  oracle::Table t(g.order(), std::vector<std::uint32_t>(g.order()));
  for (qf::Index x = 0; x < g.order(); ++x)
    for (qf::Index y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  return t;
}
