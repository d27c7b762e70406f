#pragma once

#include <stdexcept>
#include <string>

namespace linkinv {

// Error taxonomy, mirrored by the CLI exit codes:
//   domain_error      -> 1   invalid or inconsistent input data
//   resource_error    -> 2   a configured budget or hard structural bound exceeded
//   consistency_error -> 3   two routes that must agree disagreed (bug or corrupt data)

class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace linkinv
