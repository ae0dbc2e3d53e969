#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "permspec/circulant.hpp"
#include "permspec/enumerator.hpp"
#include "permspec/exact.hpp"
#include "permspec/extremal.hpp"
#include "permspec/parity.hpp"
#include "permspec/partitions.hpp"
#include "permspec/sequences.hpp"
#include "permspec/spectrum.hpp"
#include "permspec/upper.hpp"

namespace permspec {

using Json = nlohmann::ordered_json;

// {"num": "p", "den": "q"} with decimal strings.
Json json_of(const ExactValue& v);
// Accepts {"num", "den"}, a JSON integer, or a "p" / "p/q" string.
ExactValue exact_from_json(const Json& j);

Json json_of(const Spectrum& s);
Json json_of(const Partition& p);
Json json_of(const Weights& w);
Json json_of(const SpectrumReport& r);
Json json_of(const SequenceTable& t);
Json json_of(const ExtremalReport& r);
Json json_of(const RankedMagnitudes& r);
Json json_of(const CirculantReport& r);
Json json_of(const ParityReport& r);
Json json_of(const ParityCensus& c);
Json json_of(const ScanResult& r);
Json json_of(const MciReport& r);
Json json_of(const ClaimCheck& c);
Json json_of(const WeightedMatrix& m);

// {"4": [values], "5": [...]} keyed by block size.
Json spectra_to_json(const SmallSpectra& spectra);
SmallSpectra spectra_from_json(const Json& j);
SmallSpectra load_spectra(const std::string& path);
void save_spectra(const std::string& path, const SmallSpectra& spectra);

}  // namespace permspec
