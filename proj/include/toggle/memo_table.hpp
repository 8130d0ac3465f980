#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace toggle {

// Open-addressing hash map from packed weight words to a small Grundy value,
// split into shards so concurrent writers rarely contend. Values are stored
// as value + 1 so that 0 marks an empty slot. Entries are never overwritten
// with a different value; a second insert of the same key is a no-op.
template <std::size_t W>
class MemoTable {
 public:
  using Key = std::array<std::uint64_t, W>;

  explicit MemoTable(bool concurrent = false) : concurrent_(concurrent) {
    for (auto& s : shards_) s.slots.resize(kInitialSlots);
  }

  void set_concurrent(bool on) { concurrent_ = on; }

  std::optional<std::uint32_t> find(const Key& key) const {
    const std::uint64_t h = hash(key);
    const Shard& s = shards_[h >> (64 - kShardBits)];
    std::unique_lock lock(s.mutex, std::defer_lock);
    if (concurrent_) lock.lock();
    const std::size_t mask = s.slots.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      const Slot& slot = s.slots[i];
      if (slot.value == 0) return std::nullopt;
      if (slot.key == key) return slot.value - 1U;
    }
  }

  // Returns true if the key was new.
  bool insert(const Key& key, std::uint32_t value) {
    const std::uint64_t h = hash(key);
    Shard& s = shards_[h >> (64 - kShardBits)];
    std::unique_lock lock(s.mutex, std::defer_lock);
    if (concurrent_) lock.lock();
    if (2 * (s.used + 1) > s.slots.size()) grow(s);
    const std::size_t mask = s.slots.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      Slot& slot = s.slots[i];
      if (slot.value == 0) {
        slot.key = key;
        slot.value = static_cast<std::uint16_t>(value + 1);
        ++s.used;
        return true;
      }
      if (slot.key == key) return false;
    }
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& s : shards_) {
      std::unique_lock lock(s.mutex, std::defer_lock);
      if (concurrent_) lock.lock();
      n += s.used;
    }
    return n;
  }

 private:
  static constexpr unsigned kShardBits = 6;
  static constexpr std::size_t kInitialSlots = 64;

  struct Slot {
    Key key{};
    std::uint16_t value = 0;
  };
  struct Shard {
    mutable std::mutex mutex;
    std::vector<Slot> slots;
    std::size_t used = 0;
  };

  static std::uint64_t hash(const Key& key) {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (std::uint64_t w : key) {
      h ^= w;
      h *= 0xBF58476D1CE4E5B9ULL;
      h ^= h >> 31;
    }
    h *= 0x94D049BB133111EBULL;
    return h ^ (h >> 29);
  }

  static void grow(Shard& s) {
    std::vector<Slot> old(s.slots.size() * 2);
    old.swap(s.slots);
    const std::size_t mask = s.slots.size() - 1;
    for (const Slot& slot : old) {
      if (slot.value == 0) continue;
      std::size_t i = hash(slot.key) & mask;
      while (s.slots[i].value != 0) i = (i + 1) & mask;
      s.slots[i] = slot;
    }
  }

  bool concurrent_;
  std::array<Shard, std::size_t{1} << kShardBits> shards_;
};

}  // namespace toggle
