#include "fsieve/io/fetch.hpp"

#include "fsieve/error.hpp"
#include "fsieve/io/digest.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>
#include <regex>

namespace fsieve {
namespace {

class HttpTransport : public Transport {
 public:
  explicit HttpTransport(int timeout) : timeout_(timeout) {}

  std::string get(const std::string& url) override {
    static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(url, m, re)) fail(ErrorKind::InvalidArgument, "unsupported URL " + url);
    httplib::Client cli(m[1].str());
    cli.set_connection_timeout(timeout_);
    cli.set_read_timeout(timeout_);
    cli.set_follow_location(true);
    std::string path = m[2].matched ? m[2].str() : "/";
    auto res = cli.Get(path.c_str());
    if (!res) fail(ErrorKind::NetworkUnavailable, "GET " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) fail(ErrorKind::NetworkUnavailable, "GET " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
  }

 private:
  int timeout_;
};

}  // namespace

std::unique_ptr<Transport> make_http_transport(int timeout_seconds) {
  return std::make_unique<HttpTransport>(timeout_seconds);
}

FetchOptions fetch_options_from_env() {
  FetchOptions o;
  const char* cache = std::getenv("FSIEVE_CACHE_DIR");
  const char* home = std::getenv("HOME");
  o.cache_dir = cache ? std::filesystem::path(cache)
                      : (home ? std::filesystem::path(home) / ".cache" / "fsieve" : std::filesystem::path(".fsieve-cache"));
  const char* endpoint = std::getenv("FSIEVE_CURVE_ENDPOINT");
  o.endpoint = endpoint ? endpoint : "https://www.lmfdb.org/api/ec_curvedata/";
  return o;
}

std::filesystem::path CachedFetcher::cache_path(const std::string& key) const { return options_.cache_dir / (key + ".json"); }

std::optional<std::string> CachedFetcher::cached(const std::string& key) const {
  auto path = cache_path(key);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::string body = read_file(path);
  auto digest_path = path;
  digest_path += ".sha256";
  if (std::filesystem::exists(digest_path) && read_file(digest_path) != sha256_hex(body))
    fail(ErrorKind::SchemaMismatch, "cache entry " + path.string() + " does not match its digest");
  return body;
}

std::string CachedFetcher::get(const std::string& key, const std::string& url) {
  if (auto hit = cached(key)) return *hit;
  if (options_.offline || transport_ == nullptr)
    fail(ErrorKind::NetworkUnavailable, "offline and no cached copy of " + key);
  std::string body = transport_->get(url);
  auto path = cache_path(key);
  write_file_atomic(path, body);
  auto digest_path = path;
  digest_path += ".sha256";
  write_file_atomic(digest_path, sha256_hex(body));
  return body;
}

}  // namespace fsieve
