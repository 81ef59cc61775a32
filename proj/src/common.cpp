/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#include "ntorrent-sim/common.hpp"

#include <cstdio>

namespace ntsim {

std::string
formatMilliseconds(Time t)
{
  // round half away from zero at microsecond resolution
  int64_t ns = t.count();
  bool negative = ns < 0;
  uint64_t mag = negative ? static_cast<uint64_t>(-ns) : static_cast<uint64_t>(ns);
  uint64_t us = (mag + 500) / 1000;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%llu.%03llu", negative ? "-" : "",
                static_cast<unsigned long long>(us / 1000),
                static_cast<unsigned long long>(us % 1000));
  return buf;
}

} // namespace ntsim
