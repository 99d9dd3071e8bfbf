#pragma once

// Live b-file retrieval from oeis.org. Kept out of oeis.hpp so only
// network-enabled binaries pay for the HTTP client (and its TLS
// dependency).

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <string>

#include "evenup/oeis.hpp"

namespace evenup {

// b-file URL scheme: https://oeis.org/A001333/b001333.txt
inline std::string bfile_path(const std::string& id) {
  return "/" + id + "/b" + id.substr(1) + ".txt";
}

// Cache first; on miss, fetch over HTTPS, store the raw bytes in the
// cache, and parse. Network failures raise fetch_error.
inline OeisSequence fetch(const std::string& id, bool allow_network) {
  if (!valid_oeis_id(id))
    throw std::invalid_argument("malformed OEIS id \"" + id +
                                "\" (expected A followed by six digits)");
  if (auto text = oeis_cache_read(id)) return parse_bfile(*text, id);
  if (!allow_network) return fetch_cached(id);  // throws the network error
  httplib::SSLClient client("oeis.org", 443);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(bfile_path(id));
  if (!res)
    throw fetch_error("network error fetching " + id + ": " +
                      httplib::to_string(res.error()));
  if (res->status != 200)
    throw fetch_error("fetching " + id + " failed with HTTP status " +
                      std::to_string(res->status));
  oeis_cache_write(id, res->body);
  return parse_bfile(res->body, id);
}

}  // namespace evenup
