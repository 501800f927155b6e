/** Corpus loading, word-keyed splitting, and length filtering.
 *
 * The input contract is the augmented-corpus TSV produced by the upstream
 * pipeline: `accented<TAB>canonical<TAB>word<TAB>accent_tag` per line.
 */
import * as fs from 'fs';

export interface Sample {
  accented: string;
  canonical: string;
  word: string;
}

export type SplitName = 'train' | 'val' | 'test';

export interface SplitRatio {
  train: number;
  val: number;
  test: number;
}

export const DEFAULT_RATIO: SplitRatio = { train: 80, val: 10, test: 10 };

export function readCorpusTsv(path: string): Sample[] {
  const samples: Sample[] = [];
  const text = fs.readFileSync(path, 'utf8');
  for (const line of text.split('\n')) {
    if (!line.trim()) continue;
    const fields = line.split('\t');
    if (fields.length < 3) {
      throw new Error(`bad corpus line (need at least 3 tab-separated fields): ${line}`);
    }
    samples.push({ accented: fields[0], canonical: fields[1], word: fields[2] });
  }
  return samples;
}

/** Seeded FNV-1a bucket in [0, 100); all records of one word co-assign. */
export function wordBucket(word: string, seed: number): number {
  let h = 0x811c9dc5 ^ seed;
  for (let i = 0; i < word.length; i++) {
    h ^= word.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return (h >>> 0) % 100;
}

export function assignSplit(word: string, ratio: SplitRatio, seed: number): SplitName {
  const bucket = wordBucket(word, seed);
  if (bucket < ratio.train) return 'train';
  if (bucket < ratio.train + ratio.val) return 'val';
  return 'test';
}

export function splitByWord(
  samples: Sample[],
  ratio: SplitRatio,
  seed: number,
): Record<SplitName, Sample[]> {
  if (ratio.train + ratio.val + ratio.test !== 100) {
    throw new Error('split ratio parts must sum to 100');
  }
  const out: Record<SplitName, Sample[]> = { train: [], val: [], test: [] };
  for (const sample of samples) {
    out[assignSplit(sample.word, ratio, seed)].push(sample);
  }
  return out;
}

export interface FilterReport {
  kept: Sample[];
  dropped: number;
  dropRate: number;
}

/** Drop samples whose accented or canonical side exceeds maxLen characters. */
export function filterByLength(samples: Sample[], maxLen: number): FilterReport {
  const kept = samples.filter(
    (s) => [...s.accented].length <= maxLen && [...s.canonical].length <= maxLen,
  );
  const dropped = samples.length - kept.length;
  return {
    kept,
    dropped,
    dropRate: samples.length === 0 ? 0 : dropped / samples.length,
  };
}

export function identityFraction(samples: Sample[]): number {
  if (samples.length === 0) return 0;
  return samples.filter((s) => s.accented === s.canonical).length / samples.length;
}
