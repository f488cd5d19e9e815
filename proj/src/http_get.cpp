#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "parityseq/oeis_io.hpp"

namespace parityseq {

HttpGet default_http_get() {
  return [](const std::string& url) -> std::optional<std::string> {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    const auto path_start = url.find('/', scheme_end + 3);
    const auto host = url.substr(0, path_start);
    const auto path = path_start == std::string::npos ? std::string("/") : url.substr(path_start);
    try {
      httplib::Client client(host);
      client.set_follow_location(true);
      client.set_connection_timeout(10);
      client.set_read_timeout(30);
      auto res = client.Get(path);
      if (!res || res->status != 200) return std::nullopt;
      return res->body;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
}

}  // namespace parityseq
