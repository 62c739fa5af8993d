/*
   Copyright 2026 the gsss authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsss/access.hpp"
#include "gsss/attack.hpp"
#include "gsss/errors.hpp"
#include "gsss/primes.hpp"
#include "gsss/rng.hpp"
#include "gsss/scheme.hpp"
#include "gsss/shamir.hpp"
#include "gsss/sturm.hpp"

namespace {

namespace fs = std::filesystem;
using namespace gsss;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitPrimeFailure = 3;
constexpr int kExitDuplicate = 4;
constexpr int kExitClosureTooLarge = 5;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << content;
}

/// GSSS_SEED wins over --seed so scripted runs can pin every invocation.
std::string effective_seed(const std::string& flag_seed) {
  const char* env = std::getenv("GSSS_SEED");
  if (env && *env) return env;
  return flag_seed;
}

std::string sanitize_for_filename(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "_" : out;
}

std::vector<BigInt> parse_primes_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad primes JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("primes file must be a JSON array of decimal strings");
  std::vector<BigInt> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("primes file must be a JSON array of decimal strings");
    out.push_back(bigint_from_decimal(v.get<std::string>()));
  }
  return out;
}

int cmd_deal(const std::string& structure_file, const std::string& secret_text, unsigned bits,
             const std::string& seed, const std::string& out_dir, const std::string& primes_file) {
  const AccessStructure structure = access_structure_from_json(read_file(structure_file));
  const Secret secret = Secret::from_string(secret_text);

  DealResult result;
  if (!primes_file.empty()) {
    result = deal_with_primes(structure, secret, parse_primes_file(read_file(primes_file)));
  } else {
    result = deal(structure, secret, bits, seed);
  }

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  write_file(dir / "structure.json", access_structure_to_json(structure));
  write_file(dir / "public.json", public_polynomial_to_json(result.public_polynomial));
  for (const PrimeShare& share : result.shares) {
    write_file(dir / ("share_" + sanitize_for_filename(share.participant) + ".json"),
               share_to_json(share));
  }
  nlohmann::ordered_json meta;
  meta["bit_length"] = primes_file.empty() ? bits : 0;
  meta["seed_fingerprint"] = result.seed_fingerprint;
  meta["k"] = result.public_polynomial.k;
  meta["n"] = result.shares.size();
  write_file(dir / "metadata.json", meta.dump(2) + "\n");

  std::cerr << "dealt " << result.shares.size() << " shares, public polynomial of degree "
            << result.public_polynomial.k << " in " << dir.string() << "\n";
  return kExitOk;
}

int cmd_reconstruct(const std::string& public_file, const std::vector<std::string>& share_files) {
  const PublicPolynomial pub = public_polynomial_from_json(read_file(public_file));
  std::vector<PrimeShare> shares;
  shares.reserve(share_files.size());
  for (const std::string& f : share_files) shares.push_back(share_from_json(read_file(f)));
  const BigInt r = coalition_product(shares);
  std::cout << to_decimal(reconstruct(pub, r)) << "\n";
  return kExitOk;
}

int cmd_closure(const std::string& structure_file, const std::string& out_file) {
  const AccessStructure structure = access_structure_from_json(read_file(structure_file));
  const AccessStructure closed = monotone_closure(structure);
  write_file(out_file, access_structure_to_json(closed));
  const ClosureGrowthReport growth = closure_growth(structure, closed);
  nlohmann::ordered_json j;
  j["k_before"] = growth.k_before;
  j["k_after"] = growth.k_after;
  j["n"] = growth.n;
  j["growth_estimate"] = growth.growth_estimate;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& public_file, const std::string& precision_text, unsigned bits,
                std::size_t n) {
  const PublicPolynomial pub = public_polynomial_from_json(read_file(public_file));
  const BigRational precision = rational_from_string(precision_text);
  if (precision <= 0) throw InvalidParams("precision must be positive");

  SharesMeta meta;
  meta.bit_length = bits;
  meta.k = pub.k;
  meta.n = n;

  std::cout << hardening_report_to_json(hardening_report(pub, meta, precision));
  return kExitOk;
}

int cmd_shamir_split(const std::string& secret_text, std::size_t n, std::size_t t,
                     const std::string& q_text, const std::string& seed,
                     const std::string& out_dir) {
  ThresholdParams params;
  params.n = n;
  params.t = t;
  params.q = q_text.empty() ? shamir_default_modulus() : bigint_from_decimal(q_text);
  const Secret secret = Secret::from_string(secret_text);

  const std::vector<ShamirShare> shares = shamir_split(secret.value(), params, seed);
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  for (const ShamirShare& share : shares) {
    write_file(dir / ("tshare_" + share.x.get_str() + ".json"), shamir_share_to_json(share));
  }
  std::cerr << "split into " << shares.size() << " threshold shares in " << dir.string() << "\n";
  return kExitOk;
}

int cmd_shamir_combine(const std::vector<std::string>& share_files) {
  std::vector<ShamirShare> shares;
  shares.reserve(share_files.size());
  for (const std::string& f : share_files) shares.push_back(shamir_share_from_json(read_file(f)));
  std::cout << to_decimal(shamir_reconstruct(shares)) << "\n";
  return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& k_list, unsigned coeff_bits, unsigned eval_bits,
              unsigned reps) {
  if (k_list.empty()) throw InvalidParams("bench needs at least one k");
  if (coeff_bits < 1 || eval_bits < 1 || reps < 1) {
    throw InvalidParams("bench parameters must be positive");
  }

  struct Case {
    std::size_t k;
    PublicPolynomial pub;
    BigInt r;
    std::vector<long long> samples;
  };
  std::vector<Case> cases;
  cases.reserve(k_list.size());
  for (std::size_t k : k_list) {
    if (k < 1) throw InvalidParams("bench needs k >= 1");
    // synthetic monic instance with fixed-size coefficients
    DeterministicRng rng("gsss.bench.v1|" + std::to_string(k) + "|" + std::to_string(coeff_bits));
    std::vector<BigInt> coeffs;
    coeffs.reserve(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      BigInt c = rng.random_bits(coeff_bits);
      mpz_setbit(c.get_mpz_t(), coeff_bits - 1);  // hold sizes exactly fixed
      coeffs.push_back(std::move(c));
    }
    coeffs.emplace_back(1);
    Case item;
    item.k = k;
    item.pub.poly = IntPolynomial(std::move(coeffs));
    item.pub.k = k;
    item.r = rng.random_bits(eval_bits);
    mpz_setbit(item.r.get_mpz_t(), eval_bits - 1);
    item.samples.reserve(reps);
    if (reconstruct(item.pub, item.r) < 0) return kExitInvalid;  // warm-up, observable
    cases.push_back(std::move(item));
  }

  // round-robin over the k values so load spikes bias every k equally
  for (unsigned rep = 0; rep < reps; ++rep) {
    for (Case& item : cases) {
      const auto start = std::chrono::steady_clock::now();
      BigInt value = reconstruct(item.pub, item.r);
      const auto stop = std::chrono::steady_clock::now();
      if (value < 0) return kExitInvalid;
      item.samples.push_back(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
  }
  for (Case& item : cases) {
    std::sort(item.samples.begin(), item.samples.end());
    std::cout << item.k << "," << item.samples[item.samples.size() / 2] << "\n";
  }
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"prime-share secret sharing for exact access structures"};
  app.require_subcommand(1);

  std::string structure_file, secret_text, seed, out_dir, out_file, public_file, primes_file;
  std::string precision_text = "1/1000000";
  std::string q_text;
  unsigned bits = 128;
  std::size_t n = 0, t = 0;
  std::vector<std::string> share_files;
  std::vector<std::size_t> k_list;
  unsigned coeff_bits = 262144, eval_bits = 4, reps = 9;

  CLI::App* deal = app.add_subcommand("deal", "deal shares and the public polynomial");
  deal->add_option("--structure", structure_file, "access structure JSON file")->required();
  deal->add_option("--secret", secret_text, "secret, decimal or 0x-hex")->required();
  deal->add_option("--bits", bits, "prime size in bits (default 128)");
  deal->add_option("--seed", seed, "deterministic seed (GSSS_SEED overrides)");
  deal->add_option("--out-dir", out_dir, "output directory")->required();
  deal->add_option("--primes", primes_file, "JSON array of primes to use instead of generating");

  CLI::App* rec = app.add_subcommand("reconstruct", "evaluate the public polynomial at a coalition");
  rec->add_option("--public", public_file, "public polynomial JSON file")->required();
  rec->add_option("--share", share_files, "share JSON file (repeatable)")->required();

  CLI::App* clo = app.add_subcommand("closure", "monotone closure of an access structure");
  clo->add_option("--structure", structure_file, "access structure JSON file")->required();
  clo->add_option("--out", out_file, "output file for the closed structure")->required();

  CLI::App* ana = app.add_subcommand("analyze", "attack analysis of a public polynomial");
  ana->add_option("--public", public_file, "public polynomial JSON file")->required();
  ana->add_option("--precision", precision_text, "enclosure width, e.g. 1/1000000 or 1e-6");
  ana->add_option("--bits", bits, "prime size used at dealing time, for guidance");
  ana->add_option("--participants", n, "participant count, for guidance");

  CLI::App* shamir = app.add_subcommand("shamir", "threshold scheme");
  shamir->require_subcommand(1);
  CLI::App* split = shamir->add_subcommand("split", "split a secret into threshold shares");
  split->add_option("--secret", secret_text, "secret, decimal or 0x-hex")->required();
  split->add_option("--n", n, "number of shares")->required();
  split->add_option("--t", t, "reconstruction threshold")->required();
  split->add_option("--q", q_text, "prime modulus (default 2^61-1)");
  split->add_option("--seed", seed, "deterministic seed (GSSS_SEED overrides)");
  split->add_option("--out-dir", out_dir, "output directory")->required();
  CLI::App* combine = shamir->add_subcommand("combine", "recover the secret from shares");
  combine->add_option("--share", share_files, "share JSON file (repeatable)")->required();

  CLI::App* bench = app.add_subcommand("bench", "time public-polynomial evaluation");
  bench->add_option("--k-list", k_list, "polynomial degrees to time")->required();
  bench->add_option("--coeff-bits", coeff_bits, "coefficient size in bits (default 262144)");
  bench->add_option("--eval-bits", eval_bits, "evaluation point size in bits (default 4)");
  bench->add_option("--reps", reps, "repetitions per k, median reported (default 9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInvalid;
  }

  if (deal->parsed()) {
    return cmd_deal(structure_file, secret_text, bits, effective_seed(seed), out_dir, primes_file);
  }
  if (rec->parsed()) return cmd_reconstruct(public_file, share_files);
  if (clo->parsed()) return cmd_closure(structure_file, out_file);
  if (ana->parsed()) return cmd_analyze(public_file, precision_text, bits, n);
  if (shamir->parsed()) {
    if (split->parsed()) {
      return cmd_shamir_split(secret_text, n, t, q_text, effective_seed(seed), out_dir);
    }
    return cmd_shamir_combine(share_files);
  }
  if (bench->parsed()) return cmd_bench(k_list, coeff_bits, eval_bits, reps);
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ClosureTooLarge& e) {
    std::cerr << "closure too large: " << e.what() << "\n";
    return kExitClosureTooLarge;
  } catch (const DuplicateShare& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDuplicate;
  } catch (const DuplicateX& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDuplicate;
  } catch (const InsufficientPrimes& e) {
    std::cerr << "prime generation failed: " << e.what() << "\n";
    return kExitPrimeFailure;
  } catch (const InvalidBitLength& e) {
    std::cerr << "prime generation failed: " << e.what() << "\n";
    return kExitPrimeFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
