#pragma once

#include <string>

#include <json.hpp>

#include "hecke/characters.hpp"
#include "hecke/clifford.hpp"
#include "hecke/crystal.hpp"
#include "hecke/functors.hpp"
#include "hecke/multiseg.hpp"

namespace hecke {

nlohmann::json desc_to_json(const AlgebraDesc& d);
AlgebraDesc desc_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const ModuleRep& M);
ModuleRep module_from_json(const nlohmann::json& j);

nlohmann::json character_to_json(const FormalCharacter& ch);
FormalCharacter character_from_json(const nlohmann::json& j);
std::string character_to_csv(const FormalCharacter& ch);

nlohmann::json nf_to_json(const NormalFormElem& h);

nlohmann::json crystal_result_to_json(const CrystalResult& r);
nlohmann::json clifford_to_json(const CliffordReport& r);
nlohmann::json graph_to_json(const CrystalGraph& g);

nlohmann::json mseg_to_json(const Multisegment& ms);
Multisegment mseg_from_json(const nlohmann::json& j);

std::string dump_canonical(const nlohmann::json& j);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace hecke
