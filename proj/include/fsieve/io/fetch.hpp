#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace fsieve {

/// Minimal HTTP GET abstraction so tests can inject a fake.
class Transport {
 public:
  virtual ~Transport() = default;
  /// Body of a successful GET; throws NetworkUnavailable otherwise.
  virtual std::string get(const std::string& url) = 0;
};

std::unique_ptr<Transport> make_http_transport(int timeout_seconds = 20);

struct FetchOptions {
  std::filesystem::path cache_dir;
  std::string endpoint;
  bool offline = false;
};

/// Defaults from FSIEVE_CACHE_DIR and FSIEVE_CURVE_ENDPOINT.
FetchOptions fetch_options_from_env();

/// Returns the cached payload for `key`, fetching and persisting it first
/// when missing. Offline mode never calls the transport.
class CachedFetcher {
 public:
  CachedFetcher(FetchOptions options, Transport* transport) : options_(std::move(options)), transport_(transport) {}

  std::string get(const std::string& key, const std::string& url);
  std::optional<std::string> cached(const std::string& key) const;
  std::filesystem::path cache_path(const std::string& key) const;

 private:
  FetchOptions options_;
  Transport* transport_;
};

}  // namespace fsieve
