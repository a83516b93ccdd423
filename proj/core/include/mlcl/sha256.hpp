#ifndef MLCL_SHA256_HPP
#define MLCL_SHA256_HPP

#include <cstdint>
#include <cstddef>
#include <string>

namespace mlcl {

/// Minimal SHA-256 (FIPS 180-4), used for manifest output digests.
class Sha256 {
 public:
  Sha256() { reset(); }

  void reset();
  void update(const void* data, std::size_t len);
  void update(const std::string& s) { update(s.data(), s.size()); }

  /// Finalizes and returns the lowercase hex digest. The object must be
  /// reset() before reuse.
  std::string hex_digest();

 private:
  void process_block(const std::uint8_t* block);

  std::uint32_t h_[8];
  std::uint8_t buffer_[64];
  std::size_t buffer_len_ = 0;
  std::uint64_t total_len_ = 0;
};

std::string sha256_hex(const std::string& data);

/// Digest of a file's bytes; throws ValidationError if unreadable.
std::string sha256_file_hex(const std::string& path);

}  // namespace mlcl

#endif  // MLCL_SHA256_HPP
