/** Toy-accent acceptance: train the normalizer on a deterministic word-final
 * z -> s accent over the 200-word fixture dictionary and require held-out
 * exact match of at least 0.90, beating the copy-everything baseline by at
 * least 0.2, within 30 desk-scale epochs.
 *
 * Held-out means held-out words: the split is keyed on the orthographic word,
 * so every test word is unseen during training. Because 160 training words
 * are far too few to teach generic copying, training mixes in synthetic
 * identity pairs (see synthetic.ts); the evaluation set itself stays pure.
 */
import * as fs from 'fs';
import * as os from 'os';
import * as path from 'path';

import { DEFAULT_RATIO, filterByLength, readCorpusTsv, splitByWord } from '../data';
import { evaluate, loadCheckpoint } from '../evaluate';
import { train } from '../train';
import { Vocab } from '../vocab';

const FIXTURE = path.join(__dirname, '..', '..', 'fixtures', 'identity_200.tsv');

const TOY_OPTIONS = {
  hidden: 64,
  batchSize: 64,
  epochs: 30,
  learningRate: 0.01,
  lrDecayEpochs: [20, 27],
  lrDecayFactor: 0.4,
  copyPairs: 6000,
  seed: 1234,
};

async function main(): Promise<number> {
  const started = Date.now();
  const workDir = fs.mkdtempSync(path.join(os.tmpdir(), 'toy-acceptance-'));

  const identity = readCorpusTsv(FIXTURE);
  if (identity.length !== 200) {
    console.error(`FAIL: fixture should hold 200 words, found ${identity.length}`);
    return 1;
  }
  const toy = identity.map((s) => ({
    accented: s.canonical.endsWith('z') ? s.canonical.slice(0, -1) + 's' : s.canonical,
    canonical: s.canonical,
    word: s.word,
  }));

  const { kept, dropRate } = filterByLength(toy, 14);
  if (dropRate > 0) {
    console.error(`FAIL: fixture words should all fit in 14 characters`);
    return 1;
  }
  const splits = splitByWord(kept, DEFAULT_RATIO, 7);
  const vocab = Vocab.build(kept.flatMap((s) => [s.accented, s.canonical]));
  console.error(
    `toy corpus: train=${splits.train.length} val=${splits.val.length} test=${splits.test.length} words`,
  );

  const maxLen = Math.max(
    ...kept.map((s) => Math.max([...s.accented].length, [...s.canonical].length)),
  );
  const checkpointDir = path.join(workDir, 'checkpoint');
  await train(
    { vocab, maxLen, splits },
    TOY_OPTIONS,
    checkpointDir,
    (line) => console.error(line),
  );

  const checkpoint = await loadCheckpoint(checkpointDir);
  const result = evaluate(checkpoint, splits.test);
  const margin = result.exact_match - result.identity_baseline;
  console.error(JSON.stringify(result, null, 2));
  console.error(`elapsed: ${((Date.now() - started) / 1000).toFixed(0)}s`);

  const okExact = result.exact_match >= 0.9;
  const okMargin = margin >= 0.2;
  const line =
    `toy accent normalization — exact=${result.exact_match.toFixed(3)} ` +
    `baseline=${result.identity_baseline.toFixed(3)} margin=${margin.toFixed(3)} ` +
    `n=${result.n_test} within ${TOY_OPTIONS.epochs} epochs`;
  if (okExact && okMargin) {
    console.log(`PASS: ${line}`);
    return 0;
  }
  console.log(`FAIL: ${line}`);
  return 1;
}

main().then(
  (code) => process.exit(code),
  (err) => {
    console.error(err);
    process.exit(1);
  },
);
