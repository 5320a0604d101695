#pragma once

#include <gtest/gtest.h>

#include "odolab/error.hpp"

/// Kind of the odolab::Error thrown by fn; fails the test if nothing is thrown.
template <class Fn>
odolab::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const odolab::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an odolab::Error";
  return odolab::ErrorKind::ParseError;
}
