#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace eduvis {

inline constexpr const char* kVersion = "0.1.0";

// Error taxonomy shared by all modules. Catch sites dispatch on kind();
// messages carry the offending path/digest/field so diagnostics stay useful
// at the CLI boundary.
enum class ErrorKind {
    argument,
    config,
    input,
    validation,
    transport,
    replay_miss,
    parse,
    rubric,
    generation,
    import,
    render,
    stage,
    aggregation,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

namespace errors {
[[noreturn]] void raise(ErrorKind kind, const std::string& message);

inline Error argument(const std::string& m) { return Error(ErrorKind::argument, m); }
inline Error config(const std::string& m) { return Error(ErrorKind::config, m); }
inline Error input(const std::string& m) { return Error(ErrorKind::input, m); }
inline Error validation(const std::string& m) { return Error(ErrorKind::validation, m); }
inline Error transport(const std::string& m) { return Error(ErrorKind::transport, m); }
inline Error replay_miss(const std::string& m) { return Error(ErrorKind::replay_miss, m); }
inline Error parse(const std::string& m) { return Error(ErrorKind::parse, m); }
inline Error rubric(const std::string& m) { return Error(ErrorKind::rubric, m); }
inline Error generation(const std::string& m) { return Error(ErrorKind::generation, m); }
inline Error import_error(const std::string& m) { return Error(ErrorKind::import, m); }
inline Error render(const std::string& m) { return Error(ErrorKind::render, m); }
inline Error stage(const std::string& m) { return Error(ErrorKind::stage, m); }
inline Error aggregation(const std::string& m) { return Error(ErrorKind::aggregation, m); }
inline Error io(const std::string& m) { return Error(ErrorKind::io, m); }
}  // namespace errors

// Injectable clock so rate limiting, backoff, and timestamps are testable
// without wall-clock sleeps. now_ms is milliseconds since the Unix epoch.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::int64_t now_ms() = 0;
    virtual void sleep_ms(std::int64_t duration_ms) = 0;
};

class SystemClock final : public Clock {
public:
    std::int64_t now_ms() override;
    void sleep_ms(std::int64_t duration_ms) override;
};

// Starts at a fixed instant and advances only through sleep_ms / advance,
// so transcripts and backoff schedules are reproducible in tests.
class MockClock final : public Clock {
public:
    explicit MockClock(std::int64_t start_ms = 1735689600000)  // 2025-01-01T00:00:00Z
        : now_(start_ms) {}

    std::int64_t now_ms() override { return now_; }
    void sleep_ms(std::int64_t duration_ms) override { now_ += duration_ms; }
    void advance(std::int64_t duration_ms) { now_ += duration_ms; }

private:
    std::int64_t now_;
};

std::shared_ptr<Clock> system_clock();

// "2025-01-01T00:00:00.000Z" from epoch milliseconds.
std::string format_iso8601(std::int64_t epoch_ms);

// Small string helpers used across modules.
std::string trim(const std::string& s);
std::string to_lower(std::string s);
std::vector<std::string> split(const std::string& s, char sep);
bool starts_with(const std::string& s, const std::string& prefix);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace eduvis
