#ifndef DELDEC_ERROR_HPP
#define DELDEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace deldec {

// Precondition violation on a public operation.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// Received word is inconsistent with every codeword. Carries the pipeline
// stage that gave up ("layer2-repetition", "layer1-d2", "message-d2", ...).
class DecodeFailure : public std::runtime_error {
public:
    explicit DecodeFailure(const std::string& msg, std::string stage = "")
        : std::runtime_error(stage.empty() ? msg : stage + ": " + msg),
          stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

// delta_row/delta_col called across a star cell; the caller must route around.
class StarAdjacency : public std::runtime_error {
public:
    explicit StarAdjacency(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace deldec

#endif
