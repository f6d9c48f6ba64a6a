#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eduvis/common.hpp"
#include "eduvis/jsonio.hpp"

namespace eduvis::gateway {

enum class Role { system, user, assistant };
const char* role_name(Role role);

struct MessagePart {
    enum class Kind { text, image };
    Kind kind = Kind::text;
    std::string text;        // text parts
    std::string image;       // raw image bytes
    std::string media_type;  // e.g. "image/png"

    static MessagePart from_text(std::string t) {
        MessagePart p;
        p.kind = Kind::text;
        p.text = std::move(t);
        return p;
    }
    static MessagePart from_image(std::string bytes, std::string media) {
        MessagePart p;
        p.kind = Kind::image;
        p.image = std::move(bytes);
        p.media_type = std::move(media);
        return p;
    }
};

struct Message {
    Role role = Role::user;
    std::vector<MessagePart> parts;

    static Message text(Role role, std::string content) {
        Message m;
        m.role = role;
        m.parts.push_back(MessagePart::from_text(std::move(content)));
        return m;
    }
};

struct ModelRequest {
    std::string model_id;
    std::vector<Message> messages;
    double temperature = 0.0;
    int max_output = 4096;
    std::string format_hint;  // routing hint for scripted providers, e.g. "rating-object"
};

// Throws ErrorKind::argument when invariants fail (no messages, empty image part).
void check_request(const ModelRequest& req);

enum class FinishReason { stop, length, error };
const char* finish_reason_name(FinishReason r);

struct ModelResponse {
    std::string text;
    FinishReason finish_reason = FinishReason::stop;
    std::int64_t input_tokens = 0;
    std::int64_t output_tokens = 0;
    std::int64_t latency_ms = 0;
    bool from_cache = false;
};

struct RetryPolicy {
    int max_attempts = 3;
    std::int64_t base_backoff_ms = 250;
};

struct ProviderProfile {
    std::string provider_id;
    std::string endpoint;        // https://host[:port]/path for the HTTP provider
    std::string credential_env;  // environment variable holding the API key
    double rate_limit_rpm = 60.0;
    RetryPolicy retry;
};

// Content hash of a canonical request serialization. Image parts contribute
// their own content hash, not their bytes, so keys stay small and equal
// requests digest equally however they were built.
std::string digest(const ModelRequest& req);

class ModelProvider {
public:
    virtual ~ModelProvider() = default;
    virtual ModelResponse send(const ModelRequest& req, const ProviderProfile& profile) = 0;
};

// Test/fixture provider: serves a queue of canned responses (or failures) in
// order; records every request it saw.
class ScriptedProvider final : public ModelProvider {
public:
    void enqueue_text(std::string text);
    void enqueue_failure(std::string message);
    // Fallback when the queue is empty; unset means throw transport error.
    void set_default_handler(std::function<std::string(const ModelRequest&)> fn);

    ModelResponse send(const ModelRequest& req, const ProviderProfile& profile) override;

    std::size_t call_count() const { return calls_; }
    const std::vector<ModelRequest>& seen() const { return requests_; }

private:
    struct Step {
        bool fail = false;
        std::string payload;
    };
    std::deque<Step> steps_;
    std::function<std::string(const ModelRequest&)> default_handler_;
    std::vector<ModelRequest> requests_;
    std::size_t calls_ = 0;
    std::mutex mutex_;
};

// OpenAI-style chat-completions HTTP provider. Credentials are resolved from
// the profile's environment variable at call time; an unresolvable credential
// fails before any network activity.
std::unique_ptr<ModelProvider> make_http_provider();

enum class Mode { live, record, replay };
const char* mode_name(Mode mode);
Mode mode_from(const std::string& name);

struct TranscriptEntry {
    std::string timestamp;
    std::string digest;
    std::string model_id;
    std::string mode;
    std::int64_t latency_ms = 0;
    std::string finish_reason;
    std::string outcome;  // "ok", "cache-hit", or the error kind
};

// Issues requests under one of three modes:
//   live    - provider call, rate limited, no persistence
//   record  - provider call, response persisted by digest before returning
//   replay  - cache only, zero network, miss is an error naming the digest
// Every call appends one transcript entry. Safe for concurrent callers; the
// limiter, cache, and transcript serialize internally.
class Gateway {
public:
    Gateway(fs::path cache_dir, fs::path transcript_path, std::shared_ptr<Clock> clock);

    void register_provider(const std::string& provider_id, std::shared_ptr<ModelProvider> provider);

    ModelResponse complete(const ModelRequest& req, const ProviderProfile& profile, Mode mode);

    std::size_t transcript_count() const;
    const fs::path& cache_dir() const { return cache_dir_; }

private:
    class RateLimiter;

    std::optional<ModelResponse> cache_lookup(const std::string& key);
    void cache_store(const std::string& key, const ModelRequest& req, const ModelResponse& resp);
    ModelResponse call_with_retries(const ModelRequest& req, const ProviderProfile& profile);
    void log(const std::string& key, const ModelRequest& req, Mode mode, std::int64_t latency_ms,
             const std::string& finish, const std::string& outcome);
    ModelProvider* provider_for(const ProviderProfile& profile);

    fs::path cache_dir_;
    fs::path transcript_path_;
    std::shared_ptr<Clock> clock_;
    std::map<std::string, std::shared_ptr<ModelProvider>> providers_;
    std::shared_ptr<ModelProvider> http_provider_;
    std::map<std::string, std::unique_ptr<RateLimiter>> limiters_;  // per provider_id
    mutable std::mutex mutex_;
    std::size_t transcript_entries_ = 0;
};

// Sliding-window limiter: at most ceil(rpm) issues inside any 60 s window,
// enforced by waiting on the injected clock.
class Gateway::RateLimiter {
public:
    RateLimiter(double rpm, std::shared_ptr<Clock> clock);
    void acquire();

private:
    double rpm_;
    std::shared_ptr<Clock> clock_;
    std::deque<std::int64_t> issued_;
    std::mutex mutex_;
};

}  // namespace eduvis::gateway
