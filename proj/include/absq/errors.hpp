#pragma once

#include <stdexcept>
#include <string>

namespace absq {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad argument or shape: invalid sparsity, shapes, budgets, levels.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Exhaustive enumeration guard tripped.
class InstanceTooLarge : public Error {
public:
  using Error::Error;
};

// Quantized index outside its codebook range.
class CorruptIndex : public Error {
public:
  using Error::Error;
};

// Malformed text input (config, CSV, codebook files). Message carries the line.
class ParseError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace absq
