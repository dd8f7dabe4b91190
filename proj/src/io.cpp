#include "io.hpp"

#include <fstream>
#include <sstream>

namespace torelli {

namespace {

std::string letter_key(int g, int z) {
  return z < g ? "x" + std::to_string(z + 1) : "y" + std::to_string(z - g + 1);
}

} // namespace

FreeEndo endo_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw error("endo json: expected an object");
  if (!j.contains("genus") || !j["genus"].is_number_integer())
    throw error("endo json: missing integer field 'genus'");
  const int g = j["genus"].get<int>();
  if (g < 1 || g > 8) throw error("endo json: genus out of range");
  Boundary conv = Boundary::admissible;
  if (j.contains("boundary")) conv = boundary_from_name(j["boundary"].get<std::string>());

  auto read_images = [&](const nlohmann::json& m) {
    if (!m.is_object()) throw error("endo json: image table must be an object");
    std::vector<Word> im;
    for (int z = 0; z < 2 * g; ++z) {
      const std::string key = letter_key(g, z);
      if (!m.contains(key)) throw error("endo json: missing image of " + key);
      im.push_back(parse_word(m[key].get<std::string>(), g, 2 * g));
    }
    return im;
  };

  if (!j.contains("images")) throw error("endo json: missing field 'images'");
  std::vector<Word> im = read_images(j["images"]);
  std::optional<std::vector<Word>> inv;
  if (j.contains("inverse_images")) inv = read_images(j["inverse_images"]);
  return make_endo(g, conv, std::move(im), std::move(inv));
}

nlohmann::json endo_to_json(const FreeEndo& f) {
  nlohmann::json j;
  j["genus"] = f.g;
  j["boundary"] = boundary_name(f.conv);
  nlohmann::json im = nlohmann::json::object();
  for (int z = 0; z < 2 * f.g; ++z) im[letter_key(f.g, z)] = format_word(f.image(z), f.g);
  j["images"] = std::move(im);
  if (f.inv) {
    nlohmann::json iv = nlohmann::json::object();
    for (int z = 0; z < 2 * f.g; ++z)
      iv[letter_key(f.g, z)] = format_word((*f.inv)[static_cast<std::size_t>(z)], f.g);
    j["inverse_images"] = std::move(iv);
  }
  return j;
}

PureBraid braid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw error("braid json: expected an object");
  if (!j.contains("strands") || !j["strands"].is_number_integer())
    throw error("braid json: missing integer field 'strands'");
  const int g = j["strands"].get<int>();
  if (g < 1 || g > 9) throw error("braid json: strand count out of range");

  std::vector<Int> framing;
  if (j.contains("framings")) {
    for (const auto& v : j["framings"]) framing.push_back(Int(v.get<long long>()));
    if (framing.size() != static_cast<std::size_t>(g))
      throw error("braid json: expected one framing per strand");
  }

  if (j.contains("word")) {
    if (j.contains("longitudes")) throw error("braid json: give either 'word' or 'longitudes'");
    PureBraid a = parse_braid_word(j["word"].get<std::string>(), g);
    if (!framing.empty()) a.framing = std::move(framing);
    return a;
  }

  if (!j.contains("longitudes")) throw error("braid json: missing 'word' or 'longitudes'");
  auto read_words = [&](const nlohmann::json& arr) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(g))
      throw error("braid json: expected one longitude per strand");
    std::vector<Word> out;
    for (const auto& v : arr) out.push_back(parse_word(v.get<std::string>(), g, g));
    return out;
  };
  std::vector<Word> lam = read_words(j["longitudes"]);
  std::optional<std::vector<Word>> lam_inv;
  if (j.contains("inverse_longitudes")) lam_inv = read_words(j["inverse_longitudes"]);
  return make_pure_braid(g, std::move(lam), std::move(lam_inv), std::move(framing));
}

nlohmann::json braid_to_json(const PureBraid& a) {
  nlohmann::json j;
  j["strands"] = a.g;
  nlohmann::json lam = nlohmann::json::array();
  for (const Word& w : a.lam) lam.push_back(format_word(w, a.g));
  j["longitudes"] = std::move(lam);
  if (a.lam_inv) {
    nlohmann::json inv = nlohmann::json::array();
    for (const Word& w : *a.lam_inv) inv.push_back(format_word(w, a.g));
    j["inverse_longitudes"] = std::move(inv);
  }
  nlohmann::json fr = nlohmann::json::array();
  for (const Int& s : a.framing) fr.push_back(s.convert_to<long long>());
  j["framings"] = std::move(fr);
  return j;
}

nlohmann::json load_json_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw error("cannot open " + arg);
  nlohmann::json j;
  in >> j;
  return j;
}

} // namespace torelli
