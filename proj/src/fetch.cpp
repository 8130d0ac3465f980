#include <httplib.h>

#include "toggle/errors.hpp"
#include "toggle/heap.hpp"

namespace toggle {

std::string fetch_bfile(std::string_view id, const std::string& base_url) {
  if (id.size() != 7) throw InputError("sequence id must look like A071426");
  const std::string upper = "A" + std::string(id.substr(1));
  const std::string path = "/" + upper + "/b" + std::string(id.substr(1)) + ".txt";
  httplib::Client client(base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(path);
  if (!res) throw ResourceError("fetch of " + base_url + path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw ResourceError("fetch of " + base_url + path + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

}  // namespace toggle
