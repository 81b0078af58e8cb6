#pragma once

// Network b-file retrieval.  Kept out of the umbrella header so that only
// translation units that opt in pay for the HTTP client; everything else
// reads local fixtures through oeis.hpp.

#include <sstream>
#include <string>

#include "dyckodd/oeis.hpp"
#include "httplib.h"

namespace dyckodd {

// Fetch "<base_url>/<id>/b<digits>.txt" and parse it.  https works only when
// the client library is built with TLS support; a scheme the client cannot
// speak surfaces as oeis_network_error, as does any transport failure.
inline sequence_record fetch_bfile(const std::string& base_url, const std::string& id,
                                   int timeout_seconds = 10) {
    std::string path = "/" + id + "/" + bfile_name(id);  // validates the id
    httplib::Client client(base_url);
    client.set_connection_timeout(timeout_seconds, 0);
    client.set_read_timeout(timeout_seconds, 0);
    client.set_follow_location(true);
    httplib::Result res = client.Get(path);
    if (!res)
        throw oeis_network_error(id + ": " + httplib::to_string(res.error()) + " fetching " +
                                 base_url + path);
    if (res->status == 404) throw oeis_not_found(id + ": " + base_url + path + " returned 404");
    if (res->status != 200)
        throw oeis_network_error(id + ": " + base_url + path + " returned status " +
                                 std::to_string(res->status));
    std::istringstream body(res->body);
    return parse_bfile(id, body);
}

}  // namespace dyckodd
