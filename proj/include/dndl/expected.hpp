// Copyright (c) 2026 the dndl authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace dndl {

// Minimal result type: a value or a typed error. T and E must be distinct
// types. Use Expected<Unit, E> for operations without a payload.
struct Unit {
  bool operator==(const Unit&) const = default;
};

template <typename E>
struct Err {
  E error;
};

template <typename E>
Err<std::decay_t<E>> make_err(E&& e) {
  return Err<std::decay_t<E>>{std::forward<E>(e)};
}

template <typename T, typename E>
class Expected {
 public:
  Expected(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : v_(std::in_place_index<1>, std::move(error)) {}
  Expected(Err<E> err) : v_(std::in_place_index<1>, std::move(err.error)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() & {
    require_ok();
    return std::get<0>(v_);
  }
  const T& value() const& {
    require_ok();
    return std::get<0>(v_);
  }
  T&& value() && {
    require_ok();
    return std::get<0>(std::move(v_));
  }

  E& error() & {
    require_err();
    return std::get<1>(v_);
  }
  const E& error() const& {
    require_err();
    return std::get<1>(v_);
  }
  E&& error() && {
    require_err();
    return std::get<1>(std::move(v_));
  }

  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }

 private:
  void require_ok() const {
    if (!ok()) throw std::logic_error("Expected: accessed value of an error result");
  }
  void require_err() const {
    if (ok()) throw std::logic_error("Expected: accessed error of an ok result");
  }

  std::variant<T, E> v_;
};

}  // namespace dndl
