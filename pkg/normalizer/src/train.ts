/** Training: teacher-forced fitting with per-epoch metrics logging. */
import * as fs from 'fs';
import * as path from 'path';
import * as tf from '@tensorflow/tfjs';

import { initBackend } from './backend';
import { Sample } from './data';
import { saveModel } from './io';
import { buildTrainingModel } from './model';
import { syntheticCopyPairs } from './synthetic';
import { disposeTensorSet, tensorize } from './tensorize';
import { Vocab } from './vocab';

export interface TrainOptions {
  hidden: number;
  batchSize: number;
  epochs: number;
  learningRate: number;
  /** epochs (1-based) after which the learning rate is multiplied by lrDecayFactor */
  lrDecayEpochs: number[];
  lrDecayFactor: number;
  /** synthetic identity pairs mixed into training to teach generic copying */
  copyPairs: number;
  seed: number;
}

export const DESK_DEFAULTS: TrainOptions = {
  hidden: 128,
  batchSize: 64,
  epochs: 30,
  learningRate: 0.01,
  lrDecayEpochs: [19, 26],
  lrDecayFactor: 0.4,
  copyPairs: 0,
  seed: 1234,
};

/** Reference configuration from the original experiment: 256 latent
 * dimensions, batches of 4096, 100 epochs. Expect a long run. */
export const PAPER_SCALE: Partial<TrainOptions> = {
  hidden: 256,
  batchSize: 4096,
  epochs: 100,
};

export interface EpochMetrics {
  epoch: number;
  trainAcc: number;
  valAcc: number;
  trainLoss: number;
  valLoss: number;
}

export interface TrainResult {
  metrics: EpochMetrics[];
  checkpointDir: string;
}

export interface PreparedData {
  vocab: Vocab;
  maxLen: number;
  splits: Record<'train' | 'val' | 'test', Sample[]>;
}

export function loadPrepared(dir: string): PreparedData {
  const vocab = Vocab.fromJSON(JSON.parse(fs.readFileSync(path.join(dir, 'vocab.json'), 'utf8')));
  const config = JSON.parse(fs.readFileSync(path.join(dir, 'config.json'), 'utf8'));
  const splits = {
    train: JSON.parse(fs.readFileSync(path.join(dir, 'train.json'), 'utf8')),
    val: JSON.parse(fs.readFileSync(path.join(dir, 'val.json'), 'utf8')),
    test: JSON.parse(fs.readFileSync(path.join(dir, 'test.json'), 'utf8')),
  };
  return { vocab, maxLen: config.max_len, splits };
}

export function metricsCsv(metrics: EpochMetrics[]): string {
  const lines = ['epoch,train_acc,val_acc'];
  for (const m of metrics) {
    lines.push(`${m.epoch},${m.trainAcc.toFixed(6)},${m.valAcc.toFixed(6)}`);
  }
  return lines.join('\n') + '\n';
}

export async function train(
  data: PreparedData,
  options: TrainOptions,
  outDir: string,
  log: (line: string) => void = console.log,
): Promise<TrainResult> {
  const backend = await initBackend();
  log(`backend: ${backend}`);

  let trainSamples = data.splits.train;
  if (trainSamples.length === 0) {
    throw new Error('EmptyAfterFilter: no training samples');
  }
  const tensorLen = data.maxLen + 2; // room for the start/end markers
  if (options.copyPairs > 0) {
    const synthetic = syntheticCopyPairs(
      trainSamples.map((s) => s.canonical),
      { count: options.copyPairs, maxLen: data.maxLen, seed: options.seed },
    );
    trainSamples = [...trainSamples, ...synthetic];
    log(`mixed in ${synthetic.length} synthetic copy pairs`);
  }

  const model = buildTrainingModel({
    hidden: options.hidden,
    maxLen: tensorLen,
    vocabSize: data.vocab.size,
    seed: options.seed,
  });

  const trainSet = tensorize(trainSamples, data.vocab, tensorLen);
  const valSet = tensorize(data.splits.val, data.vocab, tensorLen);
  const hasVal = data.splits.val.length > 0;
  log(`training on ${trainSamples.length} samples, validating on ${data.splits.val.length}`);

  const metrics: EpochMetrics[] = [];
  let lr = options.learningRate;
  const started = Date.now();
  for (let epoch = 1; epoch <= options.epochs; epoch++) {
    if (options.lrDecayEpochs.includes(epoch)) {
      lr *= options.lrDecayFactor;
      log(`epoch ${epoch}: learning rate -> ${lr.toFixed(5)}`);
    }
    model.compile({
      optimizer: tf.train.rmsprop(lr),
      loss: 'categoricalCrossentropy',
      metrics: ['accuracy'],
    });
    const history = await model.fit(
      [trainSet.encoderInputs, trainSet.decoderInputs],
      trainSet.targets,
      {
        epochs: 1,
        batchSize: options.batchSize,
        shuffle: true,
        verbose: 0,
        validationData: hasVal
          ? [[valSet.encoderInputs, valSet.decoderInputs], valSet.targets]
          : undefined,
      },
    );
    const h = history.history;
    const entry: EpochMetrics = {
      epoch,
      trainAcc: Number(h['acc']?.[0] ?? h['categoricalAccuracy']?.[0] ?? 0),
      valAcc: Number(h['val_acc']?.[0] ?? h['val_categoricalAccuracy']?.[0] ?? 0),
      trainLoss: Number(h['loss']?.[0] ?? 0),
      valLoss: Number(h['val_loss']?.[0] ?? 0),
    };
    metrics.push(entry);
    const elapsed = ((Date.now() - started) / 1000).toFixed(0);
    log(
      `epoch ${epoch}/${options.epochs}: loss=${entry.trainLoss.toFixed(4)} ` +
        `acc=${entry.trainAcc.toFixed(3)} val_acc=${entry.valAcc.toFixed(3)} (${elapsed}s)`,
    );
    fs.mkdirSync(outDir, { recursive: true });
    fs.writeFileSync(path.join(outDir, 'metrics.csv'), metricsCsv(metrics));
  }

  disposeTensorSet(trainSet);
  disposeTensorSet(valSet);

  await saveModel(model, outDir);
  fs.writeFileSync(
    path.join(outDir, 'config.json'),
    JSON.stringify(
      {
        hidden: options.hidden,
        max_len: data.maxLen,
        tensor_len: tensorLen,
        batch_size: options.batchSize,
        epochs: options.epochs,
        learning_rate: options.learningRate,
        copy_pairs: options.copyPairs,
        seed: options.seed,
        vocab: data.vocab.toJSON(),
      },
      null,
      2,
    ),
  );
  return { metrics, checkpointDir: outDir };
}
