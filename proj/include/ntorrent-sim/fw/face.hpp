/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil -*- */

#ifndef NTSIM_FW_FACE_HPP
#define NTSIM_FW_FACE_HPP

#include "ntorrent-sim/common.hpp"

namespace ntsim::fw {

enum class FaceKind {
  Link,
  Application,
};

struct Face
{
  FaceId id = INVALID_FACEID;
  FaceKind kind = FaceKind::Link;
  /// link and remote node for link faces
  LinkId link = 0;
  NodeId peer = INVALID_NODE;
  /// application index for application faces
  uint32_t app = 0;

  bool
  isApplication() const
  {
    return kind == FaceKind::Application;
  }
};

} // namespace ntsim::fw

#endif // NTSIM_FW_FACE_HPP
